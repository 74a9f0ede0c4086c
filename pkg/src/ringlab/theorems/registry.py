"""Theorem ids, per-run options, and the dispatch used by verify/suite.

Several theorems take arguments beyond the subject ring (an idempotent, a
generator set, a matrix size).  When dispatched by id the registry picks
canonical arguments: constructions supply their own parameters (a matrix
corpus entry verifies its own inner ring), every central idempotent is tried
for the Pierce assembly, the atoms of the central-idempotent Boolean algebra
form the orthogonal set, and auxiliary objects (M2(R), T2(R), RG) are built
only while they stay table-sized.
"""
from __future__ import annotations

from dataclasses import dataclass

from .. import config
from ..classify import ring_analysis
from ..core.groups import GroupSpec
from ..core.ring import FiniteRing, MatrixRing, ProductRing, TriangularRing
from .report import ReportBuilder, VerifyReport
from . import verifiers

# Auxiliary objects built on the suite's behalf (not named in the corpus)
# stay within the memo-table range so their whole-ring scans are cheap.
AUTO_BUILD_CAP = 2048

THEOREM_IDS = [
    "one-minus-x",
    "jacobson-rclean",
    "factor",
    "product",
    "pierce",
    "orthogonal-set",
    "matrix-ring",
    "triangular-project",
    "triangular-n",
    "sqrt-characterization",
    "clean-from-rclean",
    "local-corollary",
    "orthogonal-idempotent-clean",
    "poly-lemma",
    "x-not-rclean",
    "c2-group-ring",
    "semiperfect-group-ring",
]


@dataclass
class VerifyOptions:
    size_cap: int | None = None
    deg_f: int = config.DEFAULT_DEG_F
    deg_g: int = config.DEFAULT_DEG_G
    orthogonal_interpretation: str = "exclude-trivial"
    poly_budget: int = config.DEFAULT_POLY_BUDGET

    def to_dict(self) -> dict:
        return {
            "size_cap": self.size_cap,
            "deg_f": self.deg_f,
            "deg_g": self.deg_g,
            "orthogonal_interpretation": self.orthogonal_interpretation,
            "poly_budget": self.poly_budget,
        }


def central_idempotent_atoms(ring: FiniteRing) -> list[int]:
    """Atoms of the Boolean algebra of central idempotents.

    Distinct atoms are orthogonal and their sum is 1, so they form the
    canonical complete orthogonal set of central idempotents.
    """
    cis = ring_analysis(ring).central_idempotents
    atoms = []
    for e in cis:
        if e == ring.zero:
            continue
        is_atom = True
        for f in cis:
            if f in (ring.zero, e):
                continue
            if ring.mul(f, e) == f:  # f <= e in the idempotent order
                is_atom = False
                break
        if is_atom:
            atoms.append(e)
    return atoms


def _size_na(theorem: str, ring: FiniteRing, spec_label: str | None,
             what: str, required: int) -> VerifyReport:
    rep = ReportBuilder(theorem, ring, spec_label)
    rep.hypothesis(
        f"{what} stays within the auto-build bound", False,
        f"would need {required} elements > {AUTO_BUILD_CAP}",
    )
    return rep.not_applicable()


def run_theorem(ring: FiniteRing, theorem_id: str,
                options: VerifyOptions | None = None,
                spec_label: str | None = None) -> VerifyReport:
    """Run one theorem verifier against a ring with canonical arguments."""
    opts = options or VerifyOptions()
    label = spec_label if spec_label is not None else ring.spec_text

    if theorem_id == "one-minus-x":
        return verifiers.verify_one_minus_x(ring, spec_label=label)
    if theorem_id == "jacobson-rclean":
        return verifiers.verify_jacobson_rclean(ring, spec_label=label)
    if theorem_id == "factor":
        return verifiers.verify_factor_all_principal(ring, spec_label=label)
    if theorem_id == "product":
        factors = list(ring.factors) if isinstance(ring, ProductRing) else [ring]
        return verifiers.verify_product(factors, spec_label=label)
    if theorem_id == "pierce":
        return verifiers.verify_pierce_all(ring, spec_label=label)
    if theorem_id == "orthogonal-set":
        return verifiers.verify_orthogonal_set(
            ring, central_idempotent_atoms(ring), spec_label=label
        )
    if theorem_id == "matrix-ring":
        if isinstance(ring, MatrixRing):
            inner, n = ring.inner, ring.n
        elif ring.order ** 4 <= AUTO_BUILD_CAP:
            inner, n = ring, 2
        else:
            inner, n = ring, 1
        return verifiers.verify_matrix_ring(
            inner, n, size_cap=opts.size_cap, spec_label=label
        )
    if theorem_id == "triangular-project":
        if isinstance(ring, TriangularRing) and ring.n == 2:
            return verifiers.project_triangular(ring, spec_label=label)
        required = ring.order ** 3
        if required <= AUTO_BUILD_CAP:
            from ..core.ring import make_triangular_ring

            t = make_triangular_ring(ring, 2, "lower", size_cap=opts.size_cap)
            return verifiers.project_triangular(t, spec_label=label)
        return _size_na("triangular-project", ring, label, "T2(R)", required)
    if theorem_id == "triangular-n":
        if isinstance(ring, TriangularRing) and ring.n >= 2:
            return verifiers.verify_triangular_n(
                ring.inner, ring.n, ring.shape,
                size_cap=opts.size_cap, spec_label=label,
            )
        required = ring.order ** 3
        if required <= AUTO_BUILD_CAP:
            return verifiers.verify_triangular_n(
                ring, 2, "lower", size_cap=opts.size_cap, spec_label=label
            )
        return _size_na("triangular-n", ring, label, "T2(R)", required)
    if theorem_id == "sqrt-characterization":
        return verifiers.verify_sqrt_characterization(ring, spec_label=label)
    if theorem_id == "clean-from-rclean":
        return verifiers.verify_clean_from_rclean(ring, spec_label=label)
    if theorem_id == "local-corollary":
        return verifiers.verify_local_corollary(ring, spec_label=label)
    if theorem_id == "orthogonal-idempotent-clean":
        return verifiers.verify_orthogonal_idempotent_clean(
            ring, opts.orthogonal_interpretation, spec_label=label
        )
    if theorem_id == "poly-lemma":
        return verifiers.verify_poly_lemma(
            ring, opts.deg_f, opts.deg_g, budget=opts.poly_budget, spec_label=label
        )
    if theorem_id == "x-not-rclean":
        return verifiers.verify_x_not_rclean(ring, opts.deg_g, spec_label=label)
    if theorem_id == "c2-group-ring":
        return verifiers.group_ring_c2_iso(ring, size_cap=opts.size_cap, spec_label=label)
    if theorem_id == "semiperfect-group-ring":
        required = ring.order ** 2
        if required > config.effective_size_cap(opts.size_cap):
            rep = ReportBuilder("semiperfect-group-ring", ring, label)
            rep.hypothesis("RG fits the size cap", False,
                           f"needs {required} elements")
            return rep.not_applicable()
        return verifiers.verify_semiperfect_group_ring(
            ring, GroupSpec.cyclic(2), size_cap=opts.size_cap, spec_label=label
        )
    raise KeyError(theorem_id)
