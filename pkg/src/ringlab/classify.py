"""Element predicates with explicit witnesses, plus ring-level structure.

Everything here is exact exhaustive search over element indices.  Witness
tie-breaking is always least-index in scan order (idempotents ascending, then
inner inverses ascending), so repeated calls return identical witnesses and
golden tests stay stable.  Scans are vectorized per element row; results are
identical to the sequential least-index scan by construction.

Per-ring scan results are cached in a :class:`RingAnalysis`, obtained via
:func:`ring_analysis`; rings are immutable so the cache is sound.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .core.ring import FiniteRing, make_corner
from .errors import ZeroRingError


@dataclass(frozen=True)
class RegularWitness:
    """y with x*y*x = x for the element x this witness certifies."""

    y: int


@dataclass(frozen=True)
class CleanWitness:
    """x = u + e with u a unit and e idempotent."""

    u: int
    e: int


@dataclass(frozen=True)
class RCleanWitness:
    """x = r + e with e idempotent and r regular, certified by r*y*r = r."""

    r: int
    e: int
    y: int


@dataclass
class ElementClass:
    """The full predicate vector for one element, with witnesses."""

    element: int
    unit: bool
    idempotent: bool
    nilpotent: bool
    regular: bool
    unit_regular: bool
    central: bool
    clean: bool
    r_clean: bool
    exchange: bool
    inverse: int | None = None
    nilpotency_exponent: int | None = None
    regular_witness: RegularWitness | None = None
    unit_regular_witness: int | None = None
    clean_witness: CleanWitness | None = None
    r_clean_witness: RCleanWitness | None = None
    exchange_witness: int | None = None


@dataclass
class RingProfile:
    """Ring-level flags and structure sets from exhaustive scans."""

    clean: bool
    r_clean: bool
    regular: bool
    local: bool
    directly_finite: bool
    semiperfect: bool
    commutative: bool
    jacobson_radical: list[int]
    idempotents: list[int]
    units: list[int]
    central_idempotents: list[int]
    failing: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


_ANALYSES: "weakref.WeakKeyDictionary[FiniteRing, RingAnalysis]" = weakref.WeakKeyDictionary()


def ring_analysis(ring: FiniteRing) -> "RingAnalysis":
    """The cached scan results for ``ring`` (computed lazily per field)."""
    got = _ANALYSES.get(ring)
    if got is None:
        got = RingAnalysis(ring)
        _ANALYSES[ring] = got
    return got


class RingAnalysis:
    """Lazy, vectorized whole-ring scans; arrays use -1 for "no witness".

    Scans are blocked so structural (table-free) rings are still processed in
    large numpy batches.  For direct products every scan decomposes
    componentwise -- feasibility of each component is independent, so the
    least index in product order is the tuple of componentwise least indices
    -- and the arrays are derived from the factor analyses (disable with
    ``derive_product=False`` to force the generic scan, e.g. for oracle
    tests).
    """

    def __init__(self, ring: FiniteRing, derive_product: bool = True):
        self.ring = ring
        self._idx = np.arange(ring.order, dtype=np.int64)
        self._nilpotency: dict[int, int | None] = {}
        from .core.ring import ProductRing

        self._product = ring if (derive_product and isinstance(ring, ProductRing)) else None

    def _blocks(self):
        n = self.ring.order
        block = max(1, (1 << 20) // max(n, 1))
        for start in range(0, n, block):
            yield self._idx[start : start + block]

    def _factor_analyses(self):
        return [ring_analysis(f) for f in self._product.factors]

    def _derive_componentwise(self, arrays) -> np.ndarray:
        """Encode per-factor witness arrays; -1 wherever any component is -1."""
        codec = self._product.codec
        comps = [
            arr[np.asarray(codec.slot(j, self._idx), dtype=np.int64)]
            for j, arr in enumerate(arrays)
        ]
        valid = np.ones(self.ring.order, dtype=bool)
        for c in comps:
            valid &= c >= 0
        encoded = codec.encode_vec([np.maximum(c, 0) for c in comps])
        return np.where(valid, encoded, -1)

    # -- units ---------------------------------------------------------------

    @cached_property
    def inverse(self) -> np.ndarray:
        r = self.ring
        n = r.order
        if self._product is not None:
            return self._derive_componentwise([fa.inverse for fa in self._factor_analyses()])
        if r.has_tables:
            m = np.asarray(r._mul_table, dtype=np.int64)
            both = (m == r.one) & (m.T == r.one)
            has = both.any(axis=1)
            return np.where(has, both.argmax(axis=1), -1).astype(np.int64)
        out = np.full(n, -1, dtype=np.int64)
        cols = self._idx[None, :]
        for rows in self._blocks():
            x = rows[:, None]
            ok = (np.asarray(r.mul_vec(x, cols), dtype=np.int64) == r.one) & (
                np.asarray(r.mul_vec(cols, x), dtype=np.int64) == r.one
            )
            has = ok.any(axis=1)
            out[rows[has]] = ok[has].argmax(axis=1)
        return out

    @cached_property
    def unit_mask(self) -> np.ndarray:
        return self.inverse >= 0

    @cached_property
    def units(self) -> list[int]:
        return [int(v) for v in np.nonzero(self.unit_mask)[0]]

    # -- idempotents -----------------------------------------------------------

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        if self._product is not None:
            codec = self._product.codec
            mask = np.ones(self.ring.order, dtype=bool)
            for j, fa in enumerate(self._factor_analyses()):
                mask &= fa.idempotent_mask[np.asarray(codec.slot(j, self._idx), dtype=np.int64)]
            return mask
        squares = np.asarray(self.ring.mul_vec(self._idx, self._idx), dtype=np.int64)
        return squares == self._idx

    @cached_property
    def idempotents(self) -> list[int]:
        return [int(v) for v in np.nonzero(self.idempotent_mask)[0]]

    # -- centrality ------------------------------------------------------------

    @cached_property
    def central_mask(self) -> np.ndarray:
        r = self.ring
        if self._product is not None:
            codec = self._product.codec
            mask = np.ones(r.order, dtype=bool)
            for j, fa in enumerate(self._factor_analyses()):
                mask &= fa.central_mask[np.asarray(codec.slot(j, self._idx), dtype=np.int64)]
            return mask
        if r.has_tables:
            m = np.asarray(r._mul_table, dtype=np.int64)
            return np.all(m == m.T, axis=1)
        out = np.zeros(r.order, dtype=bool)
        cols = self._idx[None, :]
        for rows in self._blocks():
            x = rows[:, None]
            xy = np.asarray(r.mul_vec(x, cols), dtype=np.int64)
            yx = np.asarray(r.mul_vec(cols, x), dtype=np.int64)
            out[rows] = (xy == yx).all(axis=1)
        return out

    @cached_property
    def is_commutative(self) -> bool:
        return bool(self.central_mask.all())

    @cached_property
    def central_idempotents(self) -> list[int]:
        mask = self.idempotent_mask & self.central_mask
        return [int(v) for v in np.nonzero(mask)[0]]

    # -- regularity ------------------------------------------------------------

    @cached_property
    def regular_y(self) -> np.ndarray:
        """Least y with x*y*x = x per element, -1 if none."""
        r = self.ring
        if self._product is not None:
            return self._derive_componentwise([fa.regular_y for fa in self._factor_analyses()])
        out = np.full(r.order, -1, dtype=np.int64)
        cols = self._idx[None, :]
        for rows in self._blocks():
            x = rows[:, None]
            xy = r.mul_vec(x, cols)
            xyx = np.asarray(r.mul_vec(xy, x), dtype=np.int64)
            ok = xyx == x
            has = ok.any(axis=1)
            out[rows[has]] = ok[has].argmax(axis=1)
        return out

    @cached_property
    def unit_regular_u(self) -> np.ndarray:
        """Least unit u with x*u*x = x per element, -1 if none."""
        r = self.ring
        if self._product is not None:
            return self._derive_componentwise(
                [fa.unit_regular_u for fa in self._factor_analyses()]
            )
        units = np.asarray(self.units, dtype=np.int64)
        out = np.full(r.order, -1, dtype=np.int64)
        if not units.size:
            return out
        cols = units[None, :]
        for rows in self._blocks():
            x = rows[:, None]
            xu = r.mul_vec(x, cols)
            xux = np.asarray(r.mul_vec(xu, x), dtype=np.int64)
            ok = xux == x
            has = ok.any(axis=1)
            out[rows[has]] = units[ok[has].argmax(axis=1)]
        return out

    # -- clean / r-clean --------------------------------------------------------

    @cached_property
    def clean_ue(self) -> tuple[np.ndarray, np.ndarray]:
        """Arrays (u, e) of the least-idempotent clean witness per element."""
        r = self.ring
        if self._product is not None:
            fas = self._factor_analyses()
            u = self._derive_componentwise([fa.clean_ue[0] for fa in fas])
            e = self._derive_componentwise([fa.clean_ue[1] for fa in fas])
            return u, np.where(u >= 0, e, -1)
        u_of = np.full(r.order, -1, dtype=np.int64)
        e_of = np.full(r.order, -1, dtype=np.int64)
        unresolved = np.ones(r.order, dtype=bool)
        for e in self.idempotents:
            u = np.asarray(r.sub_vec(self._idx, np.int64(e)), dtype=np.int64)
            hit = unresolved & self.unit_mask[u]
            u_of[hit] = u[hit]
            e_of[hit] = e
            unresolved &= ~hit
            if not unresolved.any():
                break
        return u_of, e_of

    @cached_property
    def rclean_rey(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Arrays (r, e, y) of the least-idempotent r-clean witness per element."""
        r = self.ring
        if self._product is not None:
            fas = self._factor_analyses()
            rr = self._derive_componentwise([fa.rclean_rey[0] for fa in fas])
            ee = self._derive_componentwise([fa.rclean_rey[1] for fa in fas])
            yy = self._derive_componentwise([fa.rclean_rey[2] for fa in fas])
            return rr, np.where(rr >= 0, ee, -1), np.where(rr >= 0, yy, -1)
        r_of = np.full(r.order, -1, dtype=np.int64)
        e_of = np.full(r.order, -1, dtype=np.int64)
        unresolved = np.ones(r.order, dtype=bool)
        regular_mask = self.regular_y >= 0
        for e in self.idempotents:
            cand = np.asarray(r.sub_vec(self._idx, np.int64(e)), dtype=np.int64)
            hit = unresolved & regular_mask[cand]
            r_of[hit] = cand[hit]
            e_of[hit] = e
            unresolved &= ~hit
            if not unresolved.any():
                break
        y_of = np.where(r_of >= 0, self.regular_y[np.maximum(r_of, 0)], -1)
        return r_of, e_of, y_of

    @cached_property
    def exchange_e(self) -> np.ndarray:
        """Least idempotent e with e in xR and 1-e in (1-x)R, per element x."""
        r = self.ring
        if self._product is not None:
            return self._derive_componentwise(
                [fa.exchange_e for fa in self._factor_analyses()]
            )
        out = np.full(r.order, -1, dtype=np.int64)
        ids = self.idempotents
        for x in range(r.order):
            in_xr = np.zeros(r.order, dtype=bool)
            in_xr[np.asarray(r.mul_vec(np.int64(x), self._idx), dtype=np.int64)] = True
            cx = r.sub(r.one, x)
            in_cxr = np.zeros(r.order, dtype=bool)
            in_cxr[np.asarray(r.mul_vec(np.int64(cx), self._idx), dtype=np.int64)] = True
            for e in ids:
                if in_xr[e] and in_cxr[r.sub(r.one, e)]:
                    out[x] = e
                    break
        return out

    # -- radical and beyond -------------------------------------------------------

    @cached_property
    def jacobson(self) -> list[int]:
        """{x : 1 - a*x is a unit for every a} (finite-ring radical)."""
        r = self.ring
        if self._product is not None:
            import itertools

            codec = self._product.codec
            parts = [fa.jacobson for fa in self._factor_analyses()]
            members = sorted(
                codec.encode(combo) for combo in itertools.product(*parts)
            )
            return [int(v) for v in members]
        member = np.ones(r.order, dtype=bool)
        cols = self._idx[None, :]
        for rows in self._blocks():
            ax = r.mul_vec(rows[:, None], cols)
            om = np.asarray(r.sub_vec(np.int64(r.one), ax), dtype=np.int64)
            member &= self.unit_mask[om].all(axis=0)
        return [int(v) for v in np.nonzero(member)[0]]

    def nilpotency(self, x: int) -> int | None:
        """Least k >= 1 with x^k = 0, or None; search capped at ring order."""
        if x in self._nilpotency:
            return self._nilpotency[x]
        r = self.ring
        result: int | None
        if self._product is not None:
            codec = self._product.codec
            exps = [
                fa.nilpotency(int(codec.slot(j, np.int64(x))))
                for j, fa in enumerate(self._factor_analyses())
            ]
            result = None if any(e is None for e in exps) else max(exps)
        else:
            result = None
            cur = x
            for k in range(1, r.order + 1):
                if cur == r.zero:
                    result = k
                    break
                cur = r.mul(cur, x)
        self._nilpotency[x] = result
        return result

    @cached_property
    def directly_finite_counterexample(self) -> tuple[int, int] | None:
        r = self.ring
        if self._product is not None:
            codec = self._product.codec
            for j, fa in enumerate(self._factor_analyses()):
                pair = fa.directly_finite_counterexample
                if pair is not None:
                    ones = [f.one for f in self._product.factors]
                    a = list(ones)
                    b = list(ones)
                    a[j], b[j] = pair
                    return (codec.encode(a), codec.encode(b))
            return None
        cols = self._idx[None, :]
        for rows in self._blocks():
            ab = np.asarray(r.mul_vec(rows[:, None], cols), dtype=np.int64)
            hit_a, hit_b = np.nonzero(ab == r.one)
            if hit_a.size:
                a_vals = rows[hit_a]
                ba = np.asarray(r.mul_vec(self._idx[hit_b], a_vals), dtype=np.int64)
                bad = np.nonzero(ba != r.one)[0]
                if bad.size:
                    return (int(a_vals[bad[0]]), int(hit_b[bad[0]]))
        return None


# -- public operations ------------------------------------------------------------


def is_unit(ring: FiniteRing, x: int) -> int | None:
    """Two-sided inverse of x, or None.  One-sided hits never count alone."""
    ring._check_index(x)
    y = int(ring_analysis(ring).inverse[x])
    return y if y >= 0 else None


def is_idempotent(ring: FiniteRing, x: int) -> bool:
    ring._check_index(x)
    return ring.mul(x, x) == x


def is_nilpotent(ring: FiniteRing, x: int) -> int | None:
    """Least exponent k >= 1 with x^k = 0, or None."""
    ring._check_index(x)
    return ring_analysis(ring).nilpotency(x)


def regular_witness(ring: FiniteRing, x: int) -> RegularWitness | None:
    """First y in index order with x*y*x = x."""
    ring._check_index(x)
    y = int(ring_analysis(ring).regular_y[x])
    return RegularWitness(y) if y >= 0 else None


def unit_regular_witness(ring: FiniteRing, x: int) -> int | None:
    """Least unit u with x*u*x = x."""
    ring._check_index(x)
    u = int(ring_analysis(ring).unit_regular_u[x])
    return u if u >= 0 else None


def clean_witness(ring: FiniteRing, x: int) -> CleanWitness | None:
    """Scan idempotents e ascending; first with x - e a unit."""
    ring._check_index(x)
    u_of, e_of = ring_analysis(ring).clean_ue
    if u_of[x] < 0:
        return None
    return CleanWitness(int(u_of[x]), int(e_of[x]))


def r_clean_witness(ring: FiniteRing, x: int) -> RCleanWitness | None:
    """Scan idempotents e ascending; first with x - e regular, plus its y."""
    ring._check_index(x)
    r_of, e_of, y_of = ring_analysis(ring).rclean_rey
    if r_of[x] < 0:
        return None
    return RCleanWitness(int(r_of[x]), int(e_of[x]), int(y_of[x]))


def exchange_witness(ring: FiniteRing, x: int) -> int | None:
    """Least idempotent e with e in xR and 1-e in (1-x)R."""
    ring._check_index(x)
    e = int(ring_analysis(ring).exchange_e[x])
    return e if e >= 0 else None


def is_central(ring: FiniteRing, x: int) -> bool:
    ring._check_index(x)
    return bool(ring_analysis(ring).central_mask[x])


def central_idempotents(ring: FiniteRing) -> list[int]:
    return list(ring_analysis(ring).central_idempotents)


def jacobson_radical(ring: FiniteRing) -> list[int]:
    """J(R) = {x : 1 - a*x is a unit for all a}, ascending."""
    return list(ring_analysis(ring).jacobson)


def is_local(ring: FiniteRing) -> bool:
    """Nonzero ring whose non-units are exactly the Jacobson radical."""
    if ring.order == 1:
        raise ZeroRingError("local is defined only for rings R != 0")
    a = ring_analysis(ring)
    non_units = np.nonzero(~a.unit_mask)[0]
    return [int(v) for v in non_units] == a.jacobson


def is_directly_finite(ring: FiniteRing) -> tuple[bool, tuple[int, int] | None]:
    """Whether ab = 1 forces ba = 1; returns (flag, counterexample pair)."""
    pair = ring_analysis(ring).directly_finite_counterexample
    return (pair is None, pair)


def local_idempotents(ring: FiniteRing) -> list[int]:
    """Idempotents e whose corner eRe is a local ring."""
    out = []
    for e in ring_analysis(ring).idempotents:
        if not ring_analysis(ring).central_mask[e]:
            # eRe still makes sense, but our corner construction requires
            # central e; non-central idempotents are compressed directly.
            corner_elems = _corner_elements(ring, e)
            if len(corner_elems) > 1 and _is_local_subring(ring, e, corner_elems):
                out.append(e)
            continue
        corner = make_corner(ring, e)
        if corner.order > 1 and is_local(corner):
            out.append(e)
    return out


def _corner_elements(ring: FiniteRing, e: int) -> list[int]:
    idx = np.arange(ring.order, dtype=np.int64)
    exe = np.asarray(
        ring.mul_vec(ring.mul_vec(np.int64(e), idx), np.int64(e)), dtype=np.int64
    )
    return [int(v) for v in np.unique(exe)]


def _is_local_subring(ring: FiniteRing, e: int, elems: list[int]) -> bool:
    # Local test inside eRe without building a standalone ring: units of eRe
    # are elements with a two-sided inverse relative to identity e.
    member = set(elems)
    units = set()
    for x in elems:
        for y in elems:
            if ring.mul(x, y) == e and ring.mul(y, x) == e:
                units.add(x)
                break
    non_units = [x for x in elems if x not in units]
    # J(eRe) = {x : e - a*x is a unit of eRe for all a in eRe}
    radical = []
    for x in elems:
        ok = True
        for a in elems:
            t = ring.sub(e, ring.mul(a, x))
            if t not in member or t not in units:
                ok = False
                break
        if ok:
            radical.append(x)
    return non_units == radical


def complete_orthogonal_local_set(ring: FiniteRing) -> list[int] | None:
    """Pairwise-orthogonal local idempotents summing to 1, or None.

    Depth-first search over local idempotents in ascending index order, so
    the returned list is the lexicographically least solution.
    """
    if ring.order == 1:
        return []
    candidates = local_idempotents(ring)
    target = ring.one

    def extend(start: int, chosen: list[int], total: int) -> list[int] | None:
        if total == target:
            return list(chosen)
        for i in range(start, len(candidates)):
            e = candidates[i]
            if all(
                ring.mul(e, f) == ring.zero and ring.mul(f, e) == ring.zero
                for f in chosen
            ):
                got = extend(i + 1, chosen + [e], ring.add(total, e))
                if got is not None:
                    return got
        return None

    return extend(0, [], ring.zero)


def classify_element(ring: FiniteRing, x: int) -> ElementClass:
    """The full predicate vector with witnesses for one element."""
    ring._check_index(x)
    a = ring_analysis(ring)
    inv = is_unit(ring, x)
    nil = is_nilpotent(ring, x)
    reg = regular_witness(ring, x)
    ureg = unit_regular_witness(ring, x)
    cw = clean_witness(ring, x)
    rcw = r_clean_witness(ring, x)
    ex = exchange_witness(ring, x)
    return ElementClass(
        element=x,
        unit=inv is not None,
        idempotent=is_idempotent(ring, x),
        nilpotent=nil is not None,
        regular=reg is not None,
        unit_regular=ureg is not None,
        central=bool(a.central_mask[x]),
        clean=cw is not None,
        r_clean=rcw is not None,
        exchange=ex is not None,
        inverse=inv,
        nilpotency_exponent=nil,
        regular_witness=reg,
        unit_regular_witness=ureg,
        clean_witness=cw,
        r_clean_witness=rcw,
        exchange_witness=ex,
    )


def ring_profile(ring: FiniteRing) -> RingProfile:
    """All ring-level flags, with a failing element for each false one."""
    a = ring_analysis(ring)
    u_of, _ = a.clean_ue
    r_of, _, _ = a.rclean_rey
    failing: dict[str, int] = {}

    def universal(mask: np.ndarray, name: str) -> bool:
        bad = np.nonzero(~mask)[0]
        if bad.size:
            failing[name] = int(bad[0])
            return False
        return True

    clean = universal(u_of >= 0, "clean")
    r_clean = universal(r_of >= 0, "r_clean")
    regular = universal(a.regular_y >= 0, "regular")
    commutative = universal(a.central_mask, "commutative")
    df_ok, df_pair = is_directly_finite(ring)
    notes = []
    if ring.order == 1:
        local = False
        notes.append("R = 0: 'local' requires a nonzero ring; most theorems not applicable")
    else:
        local = is_local(ring)
    notes.append(
        "semiperfect recorded as the clean flag: a finite ring has no infinite "
        "orthogonal family of idempotents, so semiperfect and clean coincide"
    )
    return RingProfile(
        clean=clean,
        r_clean=r_clean,
        regular=regular,
        local=local,
        directly_finite=df_ok,
        semiperfect=clean,
        commutative=commutative,
        jacobson_radical=list(a.jacobson),
        idempotents=list(a.idempotents),
        units=list(a.units),
        central_idempotents=list(a.central_idempotents),
        failing=failing,
        notes=notes,
    )
