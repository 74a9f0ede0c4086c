"""True (untruncated) polynomials over a finite ring, with bounded searches.

``BoundedPolynomial`` is deliberately not a :class:`FiniteRing` — R[x] is
infinite, and the statements about it quantify over genuine polynomials, so
conflating it with the finite R[x]/(x^k) construction would check the wrong
thing.  Degrees are only capped inside the explicit search operations, and a
"none within cap" answer is evidence, never a proof of non-regularity.
"""
from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass

import numpy as np

from ..errors import SearchBudgetExceeded
from .ring import FiniteRing

# Plain brute-force search (non-commutative fallback) refuses spaces larger
# than this many candidate polynomials.
BRUTE_SEARCH_BUDGET = 2_000_000


def _trim(ring: FiniteRing, coeffs) -> tuple[int, ...]:
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == ring.zero:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class BoundedPolynomial:
    """A polynomial over a finite ring; trailing zero coefficients trimmed.

    ``coeffs[i]`` is the ring index of the coefficient of x^i; the zero
    polynomial has no coefficients.
    """

    ring: FiniteRing
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ring: FiniteRing, coeffs) -> "BoundedPolynomial":
        cs = _trim(ring, coeffs)
        for c in cs:
            ring._check_index(c)
        return BoundedPolynomial(ring, cs)

    @staticmethod
    def zero(ring: FiniteRing) -> "BoundedPolynomial":
        return BoundedPolynomial(ring, ())

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            lbl = self.ring.element_label(c)
            if i == 0:
                parts.append(lbl)
            elif i == 1:
                parts.append(f"{lbl}x" if lbl != "1" else "x")
            else:
                parts.append(f"{lbl}x^{i}" if lbl != "1" else f"x^{i}")
        return " + ".join(parts) if parts else "0"


def poly_add(f: BoundedPolynomial, g: BoundedPolynomial) -> BoundedPolynomial:
    ring = f.ring
    out = [
        ring.add(f.coefficient(i), g.coefficient(i))
        for i in range(max(len(f.coeffs), len(g.coeffs)))
    ]
    return BoundedPolynomial.make(ring, out)


def poly_mul(f: BoundedPolynomial, g: BoundedPolynomial) -> BoundedPolynomial:
    """Exact product in R[x]; no truncation."""
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return BoundedPolynomial.zero(ring)
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return BoundedPolynomial.make(ring, out)


def poly_neg(f: BoundedPolynomial) -> BoundedPolynomial:
    return BoundedPolynomial.make(f.ring, [f.ring.neg(c) for c in f.coeffs])


def _is_commutative(ring: FiniteRing) -> bool:
    from ..classify import ring_analysis

    return ring_analysis(ring).is_commutative


_SOLUTION_TABLES: "weakref.WeakKeyDictionary[FiniteRing, dict]" = weakref.WeakKeyDictionary()


def _solution_row(ring: FiniteRing, a: int) -> dict[int, list[int]]:
    """solutions[b] = ascending list of y with a*y = b (cached per ring)."""
    per_ring = _SOLUTION_TABLES.get(ring)
    if per_ring is None:
        per_ring = {}
        _SOLUTION_TABLES[ring] = per_ring
    row = per_ring.get(a)
    if row is None:
        idx = np.arange(ring.order, dtype=np.int64)
        products = np.asarray(ring.mul_vec(np.int64(a), idx), dtype=np.int64)
        row = {}
        for y in range(ring.order):
            row.setdefault(int(products[y]), []).append(y)
        per_ring[a] = row
    return row


_SCALAR_OPS: "weakref.WeakKeyDictionary[FiniteRing, tuple]" = weakref.WeakKeyDictionary()
_SCALAR_TABLE_LIMIT = 512


def _scalar_ops(ring: FiniteRing):
    """(add, mul) closures tuned for the search's scalar-heavy inner loops."""
    ops = _SCALAR_OPS.get(ring)
    if ops is None:
        if ring.has_tables and ring.order <= _SCALAR_TABLE_LIMIT:
            add_rows = ring._add_table.tolist()
            mul_rows = ring._mul_table.tolist()
            ops = (
                lambda a, b: add_rows[a][b],
                lambda a, b: mul_rows[a][b],
            )
        else:
            ops = (ring.add, ring.mul)
        _SCALAR_OPS[ring] = ops
    return ops


def _search_commutative(f: BoundedPolynomial, cap: int) -> BoundedPolynomial | None:
    """Backtracking solver for f*g*f = f over a commutative base ring.

    Over a commutative ring f*g*f = (f^2)*g, so the condition is the linear
    system h*g = f with h = f^2.  When the leading coefficient of h is a unit
    the system has at most one solution and is solved by a descending
    substitution chain; otherwise coefficients g_0, g_1, ... are chosen in
    ascending index order, pinned by the lowest nonzero coefficient of h, so
    the first solution found is the one a lexicographic brute-force
    enumeration of coefficient tuples would return.
    """
    ring = f.ring
    zero = ring.zero
    h = poly_mul(f, f)
    if h.is_zero():
        return None  # f != 0 handled by caller; 0 = f^2*g forces f*g*f = 0 != f
    add, mul = _scalar_ops(ring)
    hc = list(h.coeffs)
    big_d = len(hc) - 1
    v = 0
    while hc[v] == zero:
        v += 1
    max_eq = big_d + cap
    fc = [f.coefficient(k) for k in range(max_eq + 1)]
    if len(f.coeffs) - 1 > max_eq:
        return None  # deg f exceeds every achievable deg(h*g)
    if any(fc[k] != zero for k in range(v)):
        return None
    neg_fc = [ring.neg(c) for c in fc]
    g = [zero] * (cap + 1)

    top_row = _solution_row(ring, hc[big_d])
    if all(len(ys) == 1 for ys in top_row.values()) and len(top_row) == ring.order:
        # Leading coefficient of h is a unit: equations big_d + j pin g_j
        # uniquely from above, so the system has at most one solution.
        for j in range(cap, -1, -1):
            k = big_d + j
            acc = neg_fc[k]
            for i in range(j + 1, min(k, cap) + 1):
                acc = add(acc, mul(hc[k - i], g[i]))
            ys = top_row.get(ring.neg(acc))
            if ys is None:
                return None
            g[j] = ys[0]
        for k in range(v, big_d):
            acc = neg_fc[k]
            for i in range(max(0, k - big_d), min(k, cap) + 1):
                acc = add(acc, mul(hc[k - i], g[i]))
            if acc != zero:
                return None
        return BoundedPolynomial.make(ring, g)

    pivot_row = _solution_row(ring, hc[v])

    def check_tail() -> bool:
        for k in range(v + cap + 1, max_eq + 1):
            acc = neg_fc[k]
            for i in range(max(0, k - big_d), cap + 1):
                acc = add(acc, mul(hc[k - i], g[i]))
            if acc != zero:
                return False
        return True

    def assign(j: int) -> bool:
        if j > cap:
            return check_tail()
        k = v + j
        acc = neg_fc[k]
        for i in range(max(0, k - big_d), j):
            acc = add(acc, mul(hc[k - i], g[i]))
        for y in pivot_row.get(ring.neg(acc), ()):
            g[j] = y
            if assign(j + 1):
                return True
        g[j] = zero
        return False

    if assign(0):
        return BoundedPolynomial.make(ring, g)
    return None


def _search_brute(f: BoundedPolynomial, cap: int,
                  budget: int = BRUTE_SEARCH_BUDGET) -> BoundedPolynomial | None:
    """Plain lexicographic enumeration of g; exact f*g*f comparison."""
    ring = f.ring
    space = ring.order ** (cap + 1)
    if space > budget:
        raise SearchBudgetExceeded(
            f"{space} candidate polynomials exceed the brute-force budget {budget}"
        )
    for tup in itertools.product(range(ring.order), repeat=cap + 1):
        g = BoundedPolynomial.make(ring, tup)
        if poly_mul(poly_mul(f, g), f) == BoundedPolynomial(ring, f.coeffs):
            return g
    return None


def poly_regular_witness_search(f: BoundedPolynomial, degree_cap: int) -> BoundedPolynomial | None:
    """Find g with f*g*f = f exactly and deg g <= degree_cap, or None.

    Returns the g whose coefficient tuple (g_0, ..., g_cap) is
    lexicographically least; a None result means "no witness within the cap"
    and is explicitly not a proof that f is irregular in R[x].
    """
    if degree_cap < 0:
        raise ValueError("degree cap must be >= 0")
    ring = f.ring
    if f.is_zero():
        return BoundedPolynomial.zero(ring)
    if _is_commutative(ring):
        return _search_commutative(f, degree_cap)
    return _search_brute(f, degree_cap)
