"""The default ring corpus, suite configuration, and the suite runner.

The runner fans (ring, theorem) cells to a process pool; every cell is pure
(workers re-elaborate the ring from its spec text), and results are sorted by
(ring spec, theorem id) before aggregation, so the output is byte-identical
whatever the parallelism.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import config
from .documents import suite_document
from .errors import RingLabError
from .ringspec import parse_and_elaborate
from .theorems.registry import THEOREM_IDS, VerifyOptions, run_theorem

# Z2..Z12 plus the composite constructions exercised by every theorem.
DEFAULT_CORPUS = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
    "Z4 x Z6",
    "Z2 x Z2 x Z3",
    "M2(Z2)",
    "M2(Z3)",
    "M2(Z4)",
    "T2(Z2)",
    "T2(Z3)",
    "T3(Z2)",
    "Z9[C2]",
    "Z3[C2]",
    "Z6[C2]",
    "Z4[x]/x^2",
    "Z8/(4)",
    "corner(Z6, 3)",
    "corner(Z12, 4)",
]


@dataclass
class CorpusConfig:
    rings: list[str] = field(default_factory=lambda: list(DEFAULT_CORPUS))
    theorems: list[str] = field(default_factory=lambda: list(THEOREM_IDS))
    size_cap: int | None = None
    deg_f: int = config.DEFAULT_DEG_F
    deg_g: int = config.DEFAULT_DEG_G
    poly_budget: int = config.DEFAULT_POLY_BUDGET
    parallel: int = 0  # 0 = available cores
    orthogonal_interpretation: str = "exclude-trivial"

    def options(self) -> VerifyOptions:
        return VerifyOptions(
            size_cap=self.size_cap,
            deg_f=self.deg_f,
            deg_g=self.deg_g,
            orthogonal_interpretation=self.orthogonal_interpretation,
            poly_budget=self.poly_budget,
        )

    def effective_parallel(self) -> int:
        if self.parallel and self.parallel > 0:
            return self.parallel
        return os.cpu_count() or 1


def parse_corpus_config(text: str) -> CorpusConfig:
    """Parse the flat key/value + list config format.

    Lines are ``key = value`` settings, ``ring <spec>`` / ``theorem <id>``
    list entries, blank lines, or ``#`` comments.  Listing any ring replaces
    the default corpus; listing any theorem replaces the default selection.
    """
    cfg = CorpusConfig()
    rings: list[str] = []
    theorems: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring "):
            rings.append(line[len("ring "):].strip())
            continue
        if line.startswith("theorem "):
            tid = line[len("theorem "):].strip()
            if tid not in THEOREM_IDS:
                raise ValueError(f"line {lineno}: unknown theorem id {tid!r}")
            theorems.append(tid)
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "size_cap":
            cfg.size_cap = int(value)
        elif key == "deg_f":
            cfg.deg_f = int(value)
        elif key == "deg_g":
            cfg.deg_g = int(value)
        elif key == "poly_budget":
            cfg.poly_budget = int(value)
        elif key == "parallel":
            cfg.parallel = int(value)
        elif key == "orthogonal_interpretation":
            if value not in ("exclude-trivial", "all-pairs"):
                raise ValueError(f"line {lineno}: bad interpretation {value!r}")
            cfg.orthogonal_interpretation = value
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if rings:
        cfg.rings = rings
    if theorems:
        cfg.theorems = theorems
    for pos_key, val in (("deg_f", cfg.deg_f), ("deg_g", cfg.deg_g)):
        if val < 0:
            raise ValueError(f"{pos_key} must be >= 0")
    if cfg.size_cap is not None and cfg.size_cap < 1:
        raise ValueError("size_cap must be positive")
    return cfg


def _run_cell(args: tuple) -> dict:
    spec, theorem_id, options_dict = args
    opts = VerifyOptions(**options_dict)
    ring = parse_and_elaborate(spec, size_cap=opts.size_cap)
    report = run_theorem(ring, theorem_id, opts, spec_label=spec)
    return report.to_dict()


def run_suite(cfg: CorpusConfig) -> dict:
    """Run every selected theorem against every corpus ring.

    Rings that fail to elaborate (parse errors, size cap) are recorded as
    skipped and the suite continues.  Cell results are sorted by (ring spec,
    theorem id); the document is identical for any parallelism degree.
    """
    opts = cfg.options()
    usable: list[str] = []
    skipped: list[dict] = []
    for spec in cfg.rings:
        try:
            parse_and_elaborate(spec, size_cap=cfg.size_cap)
        except RingLabError as exc:
            skipped.append({"spec": spec, "error": str(exc)})
        else:
            usable.append(spec)
    tasks = [
        (spec, tid, opts.to_dict())
        for spec in usable
        for tid in cfg.theorems
    ]
    workers = cfg.effective_parallel()
    if workers <= 1 or len(tasks) <= 1:
        results = [_run_cell(t) for t in tasks]
    else:
        import multiprocessing as mp

        ctx = mp.get_context("spawn")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            results = list(pool.map(_run_cell, tasks, chunksize=4))
    results.sort(key=lambda r: (r["ring"], r["theorem"]))
    skipped.sort(key=lambda s: s["spec"])
    return suite_document(
        results, skipped, sorted(usable), list(cfg.theorems), opts.to_dict()
    )
