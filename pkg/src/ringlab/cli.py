"""Command-line front end: a thin client for the HTTP service.

Every subcommand builds a request, sends it to the service (an in-process
ASGI transport by default, or a remote ``--server`` URL), and renders the
returned document as text or canonical JSON.  All algebra happens behind the
service API; the CLI only formats.

Exit codes: 0 = success / verified / hypothesis-not-applicable,
1 = a verifier found a counterexample, 2 = usage, parse, or size errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, config
from .documents import SEARCH_FLAGS, canonical_json

THEOREM_SHORT = {
    "one-minus-x": "1mx",
    "jacobson-rclean": "jac",
    "factor": "fac",
    "product": "prd",
    "pierce": "pie",
    "orthogonal-set": "ort",
    "matrix-ring": "mat",
    "triangular-project": "tpr",
    "triangular-n": "tri",
    "sqrt-characterization": "sqr",
    "clean-from-rclean": "cfr",
    "local-corollary": "loc",
    "orthogonal-idempotent-clean": "oic",
    "poly-lemma": "pol",
    "x-not-rclean": "xnr",
    "c2-group-ring": "c2g",
    "semiperfect-group-ring": "spg",
}

_OUTCOME_MARK = {"verified": "+", "not-applicable": ".", "counterexample": "X"}


class _Client:
    """HTTP client: in-process app by default, remote with --server."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app

            self._client = TestClient(create_app())

    def post(self, path: str, payload: dict):
        return self._client.post(path, json=payload)

    def get(self, path: str):
        return self._client.get(path)


def _tristate(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="Finite rings: construction, classification, theorem checks.",
    )
    parser.add_argument("--version", action="version", version=f"ringlab {__version__}")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="use a running ringlab service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON document")
        p.add_argument("--size-cap", type=int, default=None,
                       help=f"max ring size (env {config.SIZE_CAP_ENV}, "
                            f"default {config.DEFAULT_SIZE_CAP})")

    p = sub.add_parser("describe", help="order, elements, units, radical, profile")
    p.add_argument("spec", help="ring expression, e.g. 'Z4' or 'M2(Z2) x Z3'")
    common(p)

    p = sub.add_parser("classify", help="full predicate vector for one element")
    p.add_argument("spec")
    p.add_argument("element", help="element literal: index, '(a,b)', '[[a,b],[c,d]]'")
    common(p)

    p = sub.add_parser("verify", help="run one theorem verifier")
    p.add_argument("spec")
    p.add_argument("theorem", help="theorem id (unknown ids list the options)")
    common(p)
    p.add_argument("--deg-f", type=int, default=config.DEFAULT_DEG_F)
    p.add_argument("--deg-g", type=int, default=config.DEFAULT_DEG_G)
    p.add_argument("--poly-budget", type=int, default=config.DEFAULT_POLY_BUDGET)
    p.add_argument("--orthogonal-interpretation",
                   choices=["exclude-trivial", "all-pairs"],
                   default="exclude-trivial")

    p = sub.add_parser("suite", help="every theorem against every corpus ring")
    common(p)
    p.add_argument("--corpus", metavar="PATH", default=None,
                   help="corpus config file (default: built-in corpus)")
    p.add_argument("--deg-f", type=int, default=None)
    p.add_argument("--deg-g", type=int, default=None)
    p.add_argument("--poly-budget", type=int, default=None)
    p.add_argument("--parallel", type=int, default=None,
                   help="worker processes (default: available cores)")
    p.add_argument("--orthogonal-interpretation",
                   choices=["exclude-trivial", "all-pairs"], default=None)

    p = sub.add_parser("radical", help="list the Jacobson radical")
    p.add_argument("spec")
    common(p)

    p = sub.add_parser("search", help="elements matching classification flags")
    p.add_argument("spec")
    common(p)
    for flag in SEARCH_FLAGS:
        p.add_argument(f"--{flag.replace('_', '-')}", type=_tristate, default=None,
                       dest=flag, metavar="BOOL")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _print_error(resp) -> int:
    try:
        detail = resp.json().get("detail", {})
    except json.JSONDecodeError:
        detail = {"error": resp.text}
    if isinstance(detail, dict):
        msg = detail.get("error", str(detail))
        if detail.get("position") is not None:
            msg = f"{msg}\n  at position {detail['position']}"
            if detail.get("expected"):
                msg += f", expected one of: {', '.join(detail['expected'])}"
        if detail.get("available"):
            msg += "\n  available theorems: " + ", ".join(detail["available"])
    else:
        msg = str(detail)
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _ref(item) -> str:
    if item is None:
        return "-"
    return f"{item['label']} ({item['index']})"


def _render_describe(doc: dict) -> None:
    result = doc["results"][0]
    print(f"ring {doc['spec']}: order {result['order']}")
    print(f"  zero = {_ref(result['zero'])}, one = {_ref(result['one'])}")
    shown = ", ".join(_ref(e) for e in result["elements"])
    suffix = ", ..." if result["elements_truncated"] else ""
    print(f"  elements: {shown}{suffix}")
    for key in ("idempotents", "units", "central_idempotents", "jacobson_radical"):
        items = ", ".join(_ref(e) for e in result[key]) or "(empty)"
        print(f"  {key.replace('_', ' ')}: {items}")
    profile = result["profile"]
    flags = ", ".join(
        f"{k}={profile[k]}"
        for k in ("clean", "r_clean", "regular", "local", "directly_finite",
                  "semiperfect", "commutative")
    )
    print(f"  profile: {flags}")
    for name, ref in profile["failing"].items():
        print(f"    not {name}: failing element {_ref(ref)}")
    for note in doc["notes"]:
        print(f"  note: {note}")


def _render_classify(doc: dict) -> None:
    result = doc["results"][0]
    print(f"ring {doc['spec']}, element {_ref(result['element'])}")
    flags = result["flags"]
    print("  " + ", ".join(f"{k}={v}" for k, v in flags.items()))
    w = result["witnesses"]
    if w["inverse"] is not None:
        print(f"  inverse: {_ref(w['inverse'])}")
    if w["nilpotency_exponent"] is not None:
        print(f"  nilpotency exponent: {w['nilpotency_exponent']}")
    if w["regular"] is not None:
        print(f"  regular witness y = {_ref(w['regular']['y'])}")
    if w["unit_regular"] is not None:
        print(f"  unit-regular witness u = {_ref(w['unit_regular'])}")
    if w["clean"] is not None:
        print(f"  clean: u = {_ref(w['clean']['u'])}, e = {_ref(w['clean']['e'])}")
    if w["r_clean"] is not None:
        print(f"  r-clean: r = {_ref(w['r_clean']['r'])}, e = {_ref(w['r_clean']['e'])}, "
              f"y = {_ref(w['r_clean']['y'])}")
    if w["exchange"] is not None:
        print(f"  exchange idempotent e = {_ref(w['exchange'])}")


def _render_report(report: dict) -> None:
    print(f"theorem {report['theorem']} on {report['ring']}: {report['outcome']}")
    for hyp in report["hypotheses"]:
        detail = f" ({hyp['detail']})" if hyp.get("detail") else ""
        print(f"  hypothesis {hyp['name']}: {hyp['status']}{detail}")
    stats = report["stats"]
    print("  stats: " + ", ".join(f"{k}={v}" for k, v in stats.items()))
    if report.get("oracle_agreement") is not None:
        print(f"  constructive certificates match brute-force scan: "
              f"{report['oracle_agreement']}")
    if report["counterexample"]:
        print(f"  counterexample: {report['counterexample']}")
    for note in report["notes"]:
        print(f"  note: {note}")


def _render_suite(doc: dict) -> None:
    theorems = doc["theorems"]
    cells = {(r["ring"], r["theorem"]): r["outcome"] for r in doc["results"]}
    width = max((len(s) for s in doc["corpus"]), default=4) + 2
    header = " " * width + " ".join(THEOREM_SHORT.get(t, t[:3]) for t in theorems)
    print(header)
    for spec in doc["corpus"]:
        marks = [
            f" {_OUTCOME_MARK.get(cells.get((spec, t), '?'), '?')} "
            for t in theorems
        ]
        print(spec.ljust(width) + " ".join(m for m in marks))
    print("legend: + verified, . hypothesis-not-applicable, X counterexample")
    for skip in doc["skipped"]:
        print(f"skipped ring {skip['spec']}: {skip['error']}")
    s = doc["summary"]
    print(
        f"summary: {s['cells']} cells over {s['rings']} rings x "
        f"{s['theorems']} theorems: {s['verified']} verified, "
        f"{s['not_applicable']} not-applicable, "
        f"{s['counterexamples']} counterexamples, "
        f"{s['skipped_rings']} rings skipped"
    )


def _render_radical(doc: dict) -> None:
    result = doc["results"][0]
    items = ", ".join(_ref(e) for e in result["jacobson_radical"]) or "(empty)"
    print(f"J({doc['spec']}) = {{{items}}} ({result['size']} elements)")


def _render_search(doc: dict) -> None:
    result = doc["results"][0]
    crit = ", ".join(f"{k}={v}" for k, v in result["criteria"].items()) or "(none)"
    print(f"search {doc['spec']} with {crit}")
    items = ", ".join(_ref(e) for e in result["matches"]) or "(empty)"
    print(f"  matches: {items} ({result['count']} elements)")
    for note in doc["notes"]:
        print(f"  note: {note}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("ringlab.service:app", host=args.host, port=args.port)
        return 0

    client = _Client(args.server)
    started = time.perf_counter()

    if args.command == "describe":
        resp = client.post("/v1/describe", {"spec": args.spec, "size_cap": args.size_cap})
        renderer = _render_describe
    elif args.command == "classify":
        resp = client.post(
            "/v1/classify",
            {"spec": args.spec, "element": args.element, "size_cap": args.size_cap},
        )
        renderer = _render_classify
    elif args.command == "verify":
        resp = client.post(
            "/v1/verify",
            {
                "spec": args.spec,
                "theorem": args.theorem,
                "size_cap": args.size_cap,
                "deg_f": args.deg_f,
                "deg_g": args.deg_g,
                "poly_budget": args.poly_budget,
                "orthogonal_interpretation": args.orthogonal_interpretation,
            },
        )
        renderer = None
    elif args.command == "suite":
        payload: dict = {"size_cap": args.size_cap}
        if args.corpus is not None:
            from .corpus import parse_corpus_config

            try:
                with open(args.corpus, "r", encoding="utf-8") as fh:
                    cfg = parse_corpus_config(fh.read())
            except (OSError, ValueError) as exc:
                print(f"error: bad corpus config: {exc}", file=sys.stderr)
                return 2
            payload.update(
                rings=cfg.rings,
                theorems=cfg.theorems,
                deg_f=cfg.deg_f,
                deg_g=cfg.deg_g,
                poly_budget=cfg.poly_budget,
                parallel=cfg.parallel,
                orthogonal_interpretation=cfg.orthogonal_interpretation,
            )
            if cfg.size_cap is not None and args.size_cap is None:
                payload["size_cap"] = cfg.size_cap
        for key, value in (
            ("deg_f", args.deg_f),
            ("deg_g", args.deg_g),
            ("poly_budget", args.poly_budget),
            ("parallel", args.parallel),
            ("orthogonal_interpretation", args.orthogonal_interpretation),
        ):
            if value is not None:
                payload[key] = value
        resp = client.post("/v1/suite", payload)
        renderer = _render_suite
    elif args.command == "radical":
        resp = client.post("/v1/radical", {"spec": args.spec, "size_cap": args.size_cap})
        renderer = _render_radical
    elif args.command == "search":
        payload = {"spec": args.spec, "size_cap": args.size_cap}
        for flag in SEARCH_FLAGS:
            value = getattr(args, flag)
            if value is not None:
                payload[flag] = value
        resp = client.post("/v1/search", payload)
        renderer = _render_search
    else:  # pragma: no cover - argparse enforces the choices
        parser.error(f"unknown command {args.command}")
        return 2

    if resp.status_code >= 400:
        return _print_error(resp)
    doc = resp.json()
    elapsed = time.perf_counter() - started

    if args.json:
        print(canonical_json(doc))
    else:
        if args.command == "verify":
            _render_report(doc["results"][0])
        else:
            renderer(doc)
        print(f"elapsed: {elapsed:.3f}s")

    if args.command == "verify":
        return 1 if doc["results"][0]["outcome"] == "counterexample" else 0
    if args.command == "suite":
        return 1 if doc["summary"]["counterexamples"] else 0
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
