"""Finite rings with identity, built compositionally.

Every ring is a :class:`FiniteRing`: an immutable value whose elements are
the dense indices ``0..order-1`` with structural arithmetic.  Each
construction (residue ring, direct product, matrix ring, triangular matrix
ring, group ring, truncated polynomial ring, corner, quotient) supplies
vectorized index arithmetic over numpy arrays; scalar ``add``/``mul``/``neg``
and the memoized order<=4096 tables are derived from the same vectorized
functions, so there is a single source of truth per construction.

Index encodings are mixed-radix with the first component most significant
(row-major for matrices); they are stable and documented per class.
"""
from __future__ import annotations

import numpy as np

from .. import config
from ..errors import ConstructionError, SizeCapExceeded
from .expr import (
    CornerExpr,
    CyclicGroup,
    GroupRingExpr,
    InlineGroup,
    MatrixExpr,
    ProductExpr,
    QuotientExpr,
    RingExpr,
    TriangularExpr,
    TruncPolyExpr,
    ZModExpr,
    print_expr,
)
from .groups import GroupSpec

_TABLE_ROW_BLOCK = 1 << 22  # elements per block when materializing tables


def _check_cap(required: int, size_cap: int | None, what: str) -> None:
    cap = config.effective_size_cap(size_cap)
    if required > cap:
        raise SizeCapExceeded(required, cap, what)


# Rings are immutable and fully determined by (construction, table cap), so
# the public constructors memoize recent builds; repeated verifier runs that
# rebuild the same auxiliary object (a group ring, a corner) then also share
# the classification caches attached to the ring instance.
_CONSTRUCTION_MEMO: dict[tuple, "FiniteRing"] = {}
_CONSTRUCTION_MEMO_LIMIT = 32


def _memoized(key: tuple, build):
    ring = _CONSTRUCTION_MEMO.get(key)
    if ring is None:
        ring = build()
        while len(_CONSTRUCTION_MEMO) >= _CONSTRUCTION_MEMO_LIMIT:
            _CONSTRUCTION_MEMO.pop(next(iter(_CONSTRUCTION_MEMO)))
        _CONSTRUCTION_MEMO[key] = ring
    return ring


def _resolved_table_cap(table_cap: int | None) -> int:
    return config.DEFAULT_TABLE_CAP if table_cap is None else table_cap


class TupleCodec:
    """Mixed-radix codec for fixed-length tuples of sub-indices.

    The first slot is the most significant digit.  Decode arrays are
    precomputed so slot extraction is a single numpy gather.
    """

    def __init__(self, radices):
        self.radices = tuple(int(r) for r in radices)
        size = 1
        strides = []
        for r in reversed(self.radices):
            strides.append(size)
            size *= r
        self.strides = tuple(reversed(strides))
        self.size = size
        idx = np.arange(size, dtype=np.int64)
        self._slots = [
            (idx // s) % r for s, r in zip(self.strides, self.radices)
        ]

    def slot(self, j: int, a):
        """Component j of encoded index array ``a``."""
        return self._slots[j][a]

    def encode_vec(self, comps):
        out = np.asarray(comps[0], dtype=np.int64) * self.strides[0]
        for c, s in zip(comps[1:], self.strides[1:]):
            out = out + np.asarray(c, dtype=np.int64) * s
        return out

    def encode(self, tup) -> int:
        if len(tup) != len(self.radices):
            raise ValueError(f"expected {len(self.radices)} components, got {len(tup)}")
        out = 0
        for c, s, r in zip(tup, self.strides, self.radices):
            if not 0 <= c < r:
                raise ValueError(f"component {c} out of range 0..{r - 1}")
            out += int(c) * s
        return out

    def decode(self, i: int) -> tuple[int, ...]:
        return tuple(int(s[i]) for s in self._slots)


class FiniteRing:
    """An immutable finite ring with identity on indices ``0..order-1``.

    Subclasses implement ``_add_vec``/``_mul_vec``/``_neg_vec`` over numpy
    index arrays (broadcasting allowed) plus the zero/one indices, labels and
    literal decoding.  Instances are safe to share across workers: all state
    is computed at construction and never mutated.
    """

    def __init__(self, order: int, construction: RingExpr, table_cap: int | None = None):
        if order < 1:
            raise ConstructionError("a ring needs at least one element")
        self.order = int(order)
        self.construction = construction
        cap = config.DEFAULT_TABLE_CAP if table_cap is None else table_cap
        self._add_table = None
        self._mul_table = None
        self._neg_table = None
        if self.order <= cap:
            self._build_tables()
        self.zero = int(self._zero_index())
        self.one = int(self._one_index())

    # -- construction hooks -------------------------------------------------

    def _add_vec(self, a, b):
        raise NotImplementedError

    def _mul_vec(self, a, b):
        raise NotImplementedError

    def _neg_vec(self, a):
        raise NotImplementedError

    def _zero_index(self) -> int:
        raise NotImplementedError

    def _one_index(self) -> int:
        raise NotImplementedError

    # -- derived machinery ---------------------------------------------------

    def _build_tables(self) -> None:
        n = self.order
        idx = np.arange(n, dtype=np.int64)
        dtype = np.min_scalar_type(max(n - 1, 1))
        add = np.empty((n, n), dtype=dtype)
        mul = np.empty((n, n), dtype=dtype)
        block = max(1, _TABLE_ROW_BLOCK // n)
        for start in range(0, n, block):
            rows = idx[start : start + block, None]
            add[start : start + block] = self._add_vec(rows, idx[None, :])
            mul[start : start + block] = self._mul_vec(rows, idx[None, :])
        self._add_table = add
        self._mul_table = mul
        self._neg_table = self._neg_vec(idx).astype(dtype)

    @property
    def has_tables(self) -> bool:
        return self._add_table is not None

    def _check_index(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range 0..{self.order - 1}")

    def add(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return int(self._add_vec(np.int64(a), np.int64(b)))

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return int(self._mul_vec(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        self._check_index(a)
        if self._neg_table is not None:
            return int(self._neg_table[a])
        return int(self._neg_vec(np.int64(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # Vectorized variants (no bounds checks; internal scans rely on these).

    def add_vec(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_vec(a, b)

    def mul_vec(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_vec(a, b)

    def neg_vec(self, a):
        if self._neg_table is not None:
            return self._neg_table[a]
        return self._neg_vec(a)

    def sub_vec(self, a, b):
        return self.add_vec(a, self.neg_vec(b))

    # -- presentation ----------------------------------------------------------

    @property
    def spec_text(self) -> str:
        return print_expr(self.construction)

    def element_label(self, a: int) -> str:
        self._check_index(a)
        return self._label(a)

    def _label(self, a: int) -> str:
        return str(a)

    def element_from_literal(self, lit):
        """Resolve a parsed element literal (int or tagged tree) to an index.

        Plain integers are raw indices for every construction; tuple and
        matrix literals are handled by the constructions that have them.
        """
        if isinstance(lit, int):
            if not 0 <= lit < self.order:
                raise ValueError(
                    f"index {lit} out of range 0..{self.order - 1} for {self.spec_text}"
                )
            return lit
        raise ValueError(
            f"{self.spec_text} accepts only plain integer element literals"
        )

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec_text} order={self.order}>"


class ZModRing(FiniteRing):
    """Z/nZ; index i is the residue i."""

    def __init__(self, n: int, *, table_cap: int | None = None):
        if n < 1:
            raise ConstructionError("Z_n requires n >= 1")
        self.n = n
        super().__init__(n, ZModExpr(n), table_cap)

    def _add_vec(self, a, b):
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.n

    def _mul_vec(self, a, b):
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.n

    def _neg_vec(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.n

    def _zero_index(self) -> int:
        return 0

    def _one_index(self) -> int:
        return 1 if self.n > 1 else 0


class ProductRing(FiniteRing):
    """Direct product with componentwise arithmetic.

    Index encoding: mixed radix over factor orders, first factor most
    significant.
    """

    def __init__(self, factors, *, construction: RingExpr | None = None,
                 table_cap: int | None = None):
        factors = tuple(factors)
        if not factors:
            raise ConstructionError("a direct product needs at least one factor")
        self.factors = factors
        self.codec = TupleCodec([f.order for f in factors])
        if construction is None:
            construction = ProductExpr(tuple(f.construction for f in factors))
        super().__init__(self.codec.size, construction, table_cap)

    def _comp_op(self, op_name, a, b):
        comps = [
            getattr(f, op_name)(self.codec.slot(j, a), self.codec.slot(j, b))
            for j, f in enumerate(self.factors)
        ]
        return self.codec.encode_vec(comps)

    def _add_vec(self, a, b):
        return self._comp_op("add_vec", a, b)

    def _mul_vec(self, a, b):
        return self._comp_op("mul_vec", a, b)

    def _neg_vec(self, a):
        comps = [f.neg_vec(self.codec.slot(j, a)) for j, f in enumerate(self.factors)]
        return self.codec.encode_vec(comps)

    def _zero_index(self) -> int:
        return self.codec.encode([f.zero for f in self.factors])

    def _one_index(self) -> int:
        return self.codec.encode([f.one for f in self.factors])

    def component(self, j: int, a: int) -> int:
        """Projection of element ``a`` onto factor ``j``."""
        return int(self.codec.slot(j, a))

    def _label(self, a: int) -> str:
        parts = [f.element_label(int(self.codec.slot(j, a)))
                 for j, f in enumerate(self.factors)]
        return "(" + ",".join(parts) + ")"

    def element_from_literal(self, lit):
        if isinstance(lit, tuple) and lit and lit[0] == "tuple":
            items = lit[1]
            if len(items) != len(self.factors):
                raise ValueError(
                    f"expected {len(self.factors)} components for {self.spec_text}"
                )
            return self.codec.encode(
                [f.element_from_literal(item) for f, item in zip(self.factors, items)]
            )
        return super().element_from_literal(lit)


class MatrixRing(FiniteRing):
    """n x n matrices over an inner ring, entries row-major in the encoding."""

    def __init__(self, inner: FiniteRing, n: int, *, table_cap: int | None = None):
        if n < 1:
            raise ConstructionError("matrix ring requires n >= 1")
        self.inner = inner
        self.n = n
        self.codec = TupleCodec([inner.order] * (n * n))
        super().__init__(self.codec.size, MatrixExpr(n, inner.construction), table_cap)

    def _slot(self, i, j, a):
        return self.codec.slot(i * self.n + j, a)

    def _add_vec(self, a, b):
        comps = [
            self.inner.add_vec(self.codec.slot(s, a), self.codec.slot(s, b))
            for s in range(self.n * self.n)
        ]
        return self.codec.encode_vec(comps)

    def _mul_vec(self, a, b):
        inner, n = self.inner, self.n
        comps = []
        for i in range(n):
            for j in range(n):
                acc = None
                for k in range(n):
                    term = inner.mul_vec(self._slot(i, k, a), self._slot(k, j, b))
                    acc = term if acc is None else inner.add_vec(acc, term)
                comps.append(acc)
        return self.codec.encode_vec(comps)

    def _neg_vec(self, a):
        comps = [self.inner.neg_vec(self.codec.slot(s, a)) for s in range(self.n * self.n)]
        return self.codec.encode_vec(comps)

    def _zero_index(self) -> int:
        return self.codec.encode([self.inner.zero] * (self.n * self.n))

    def _one_index(self) -> int:
        entries = [
            self.inner.one if i == j else self.inner.zero
            for i in range(self.n)
            for j in range(self.n)
        ]
        return self.codec.encode(entries)

    def entry(self, a: int, i: int, j: int) -> int:
        """Inner-ring index of entry (i, j) of matrix ``a``."""
        return int(self._slot(i, j, a))

    def from_entries(self, rows) -> int:
        """Encode a full n x n matrix of inner-ring indices."""
        flat = [int(v) for row in rows for v in row]
        return self.codec.encode(flat)

    def _label(self, a: int) -> str:
        rows = []
        for i in range(self.n):
            cells = [self.inner.element_label(self.entry(a, i, j)) for j in range(self.n)]
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"

    def element_from_literal(self, lit):
        if isinstance(lit, tuple) and lit and lit[0] == "matrix":
            rows = lit[1]
            if len(rows) != self.n or any(len(r) != self.n for r in rows):
                raise ValueError(f"expected a {self.n}x{self.n} matrix literal")
            return self.from_entries(
                [[self.inner.element_from_literal(v) for v in row] for row in rows]
            )
        return super().element_from_literal(lit)


class TriangularRing(FiniteRing):
    """Triangular n x n matrices over one ring; off-shape entries are zero.

    Encoding stores only the on-shape positions, row-major, first position
    most significant.
    """

    def __init__(self, inner: FiniteRing, n: int, shape: str = "lower", *,
                 table_cap: int | None = None):
        if n < 1:
            raise ConstructionError("triangular ring requires n >= 1")
        if shape not in ("lower", "upper"):
            raise ConstructionError("shape must be 'lower' or 'upper'")
        self.inner = inner
        self.n = n
        self.shape = shape
        if shape == "lower":
            self.positions = [(i, j) for i in range(n) for j in range(i + 1)]
        else:
            self.positions = [(i, j) for i in range(n) for j in range(i, n)]
        self.pos_index = {p: s for s, p in enumerate(self.positions)}
        self.codec = TupleCodec([inner.order] * len(self.positions))
        super().__init__(
            self.codec.size, TriangularExpr(n, inner.construction, shape), table_cap
        )

    def _add_vec(self, a, b):
        comps = [
            self.inner.add_vec(self.codec.slot(s, a), self.codec.slot(s, b))
            for s in range(len(self.positions))
        ]
        return self.codec.encode_vec(comps)

    def _mul_vec(self, a, b):
        inner = self.inner
        comps = []
        for (i, j) in self.positions:
            acc = None
            for k in range(self.n):
                if (i, k) in self.pos_index and (k, j) in self.pos_index:
                    term = inner.mul_vec(
                        self.codec.slot(self.pos_index[(i, k)], a),
                        self.codec.slot(self.pos_index[(k, j)], b),
                    )
                    acc = term if acc is None else inner.add_vec(acc, term)
            if acc is None:  # unreachable: (i,i) and (j,j) are always on-shape
                acc = np.broadcast_to(np.int64(inner.zero), np.shape(a))
            comps.append(acc)
        return self.codec.encode_vec(comps)

    def _neg_vec(self, a):
        comps = [
            self.inner.neg_vec(self.codec.slot(s, a))
            for s in range(len(self.positions))
        ]
        return self.codec.encode_vec(comps)

    def _zero_index(self) -> int:
        return self.codec.encode([self.inner.zero] * len(self.positions))

    def _one_index(self) -> int:
        return self.codec.encode(
            [self.inner.one if i == j else self.inner.zero for (i, j) in self.positions]
        )

    def entry(self, a: int, i: int, j: int) -> int:
        """Inner index of entry (i, j); off-shape entries are inner zero."""
        pos = self.pos_index.get((i, j))
        if pos is None:
            return self.inner.zero
        return int(self.codec.slot(pos, a))

    def from_entries(self, rows) -> int:
        vals = []
        for (i, j) in self.positions:
            vals.append(int(rows[i][j]))
        for i in range(self.n):
            for j in range(self.n):
                if (i, j) not in self.pos_index and int(rows[i][j]) != self.inner.zero:
                    raise ValueError(
                        f"entry ({i},{j}) must be zero for a {self.shape}-triangular matrix"
                    )
        return self.codec.encode(vals)

    def _label(self, a: int) -> str:
        rows = []
        for i in range(self.n):
            cells = [self.inner.element_label(self.entry(a, i, j)) for j in range(self.n)]
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"

    def element_from_literal(self, lit):
        if isinstance(lit, tuple) and lit and lit[0] == "matrix":
            rows = lit[1]
            if len(rows) != self.n or any(len(r) != self.n for r in rows):
                raise ValueError(f"expected a {self.n}x{self.n} matrix literal")
            decoded = [[self.inner.element_from_literal(v) for v in row] for row in rows]
            return self.from_entries(decoded)
        return super().element_from_literal(lit)


class GroupRing(FiniteRing):
    """Group ring R[G]: coefficient tuples indexed by group elements.

    The product is convolution over the Cayley table.  Encoding: coefficient
    of group element 0 most significant.
    """

    def __init__(self, inner: FiniteRing, group: GroupSpec, *,
                 construction: RingExpr | None = None,
                 table_cap: int | None = None):
        self.inner = inner
        self.group = group
        m = group.order
        self.codec = TupleCodec([inner.order] * m)
        # terms[k] lists the (g, h) pairs with g*h = k.
        self.terms = [[] for _ in range(m)]
        for g in range(m):
            for h in range(m):
                self.terms[group.table[g][h]].append((g, h))
        if construction is None:
            construction = GroupRingExpr(inner.construction, InlineGroup(group.table))
        super().__init__(self.codec.size, construction, table_cap)

    def _add_vec(self, a, b):
        comps = [
            self.inner.add_vec(self.codec.slot(s, a), self.codec.slot(s, b))
            for s in range(self.group.order)
        ]
        return self.codec.encode_vec(comps)

    def _mul_vec(self, a, b):
        inner = self.inner
        comps = []
        for k in range(self.group.order):
            acc = None
            for (g, h) in self.terms[k]:
                term = inner.mul_vec(self.codec.slot(g, a), self.codec.slot(h, b))
                acc = term if acc is None else inner.add_vec(acc, term)
            comps.append(acc)
        return self.codec.encode_vec(comps)

    def _neg_vec(self, a):
        comps = [
            self.inner.neg_vec(self.codec.slot(s, a)) for s in range(self.group.order)
        ]
        return self.codec.encode_vec(comps)

    def _zero_index(self) -> int:
        return self.codec.encode([self.inner.zero] * self.group.order)

    def _one_index(self) -> int:
        coeffs = [self.inner.zero] * self.group.order
        coeffs[self.group.identity] = self.inner.one
        return self.codec.encode(coeffs)

    def coefficient(self, a: int, g: int) -> int:
        return int(self.codec.slot(g, a))

    def from_coefficients(self, coeffs) -> int:
        return self.codec.encode([int(c) for c in coeffs])

    def _label(self, a: int) -> str:
        parts = [
            self.inner.element_label(self.coefficient(a, g))
            for g in range(self.group.order)
        ]
        return "(" + ",".join(parts) + ")"

    def element_from_literal(self, lit):
        if isinstance(lit, tuple) and lit and lit[0] == "tuple":
            items = lit[1]
            if len(items) != self.group.order:
                raise ValueError(
                    f"expected {self.group.order} coefficients for {self.spec_text}"
                )
            return self.from_coefficients(
                [self.inner.element_from_literal(item) for item in items]
            )
        return super().element_from_literal(lit)


class TruncPolyRing(FiniteRing):
    """R[x]/(x^k): coefficient tuples (c_0..c_{k-1}), truncated convolution.

    Encoding: constant coefficient most significant.
    """

    def __init__(self, inner: FiniteRing, k: int, *, table_cap: int | None = None):
        if k < 1:
            raise ConstructionError("truncation order must be >= 1")
        self.inner = inner
        self.k = k
        self.codec = TupleCodec([inner.order] * k)
        super().__init__(self.codec.size, TruncPolyExpr(inner.construction, k), table_cap)

    def _add_vec(self, a, b):
        comps = [
            self.inner.add_vec(self.codec.slot(s, a), self.codec.slot(s, b))
            for s in range(self.k)
        ]
        return self.codec.encode_vec(comps)

    def _mul_vec(self, a, b):
        inner = self.inner
        comps = []
        for d in range(self.k):
            acc = None
            for i in range(d + 1):
                term = inner.mul_vec(self.codec.slot(i, a), self.codec.slot(d - i, b))
                acc = term if acc is None else inner.add_vec(acc, term)
            comps.append(acc)
        return self.codec.encode_vec(comps)

    def _neg_vec(self, a):
        comps = [self.inner.neg_vec(self.codec.slot(s, a)) for s in range(self.k)]
        return self.codec.encode_vec(comps)

    def _zero_index(self) -> int:
        return self.codec.encode([self.inner.zero] * self.k)

    def _one_index(self) -> int:
        coeffs = [self.inner.zero] * self.k
        coeffs[0] = self.inner.one
        return self.codec.encode(coeffs)

    def coefficient(self, a: int, d: int) -> int:
        return int(self.codec.slot(d, a))

    def _label(self, a: int) -> str:
        parts = [self.inner.element_label(self.coefficient(a, d)) for d in range(self.k)]
        return "(" + ",".join(parts) + ")"

    def element_from_literal(self, lit):
        if isinstance(lit, tuple) and lit and lit[0] == "tuple":
            items = lit[1]
            if len(items) != self.k:
                raise ValueError(f"expected {self.k} coefficients for {self.spec_text}")
            return self.codec.encode(
                [self.inner.element_from_literal(item) for item in items]
            )
        return super().element_from_literal(lit)


class CornerRing(FiniteRing):
    """The corner eRe for a central idempotent e; identity is e.

    Elements are the distinct values e*x*e of the inner ring, in ascending
    inner-index order; ``to_inner``/``from_inner`` map between the corner and
    the inner ring.
    """

    def __init__(self, inner: FiniteRing, e: int, *, table_cap: int | None = None):
        inner._check_index(e)
        if inner.mul(e, e) != e:
            raise ConstructionError(
                f"corner({inner.spec_text}, {e}): {e} is not idempotent"
            )
        idx = np.arange(inner.order, dtype=np.int64)
        ex = inner.mul_vec(np.int64(e), idx)
        xe = inner.mul_vec(idx, np.int64(e))
        bad = np.nonzero(np.asarray(ex) != np.asarray(xe))[0]
        if bad.size:
            x = int(bad[0])
            raise ConstructionError(
                f"corner({inner.spec_text}, {e}): {e} is not central "
                f"(e*x != x*e for x={x})"
            )
        exe = np.asarray(inner.mul_vec(ex, np.int64(e)), dtype=np.int64)
        members = np.unique(exe)
        self.inner = inner
        self.e = e
        self.to_inner = members
        from_inner = np.full(inner.order, -1, dtype=np.int64)
        from_inner[members] = np.arange(len(members), dtype=np.int64)
        self.from_inner = from_inner
        super().__init__(
            len(members), CornerExpr(inner.construction, e), table_cap
        )

    def _add_vec(self, a, b):
        return self.from_inner[
            np.asarray(self.inner.add_vec(self.to_inner[a], self.to_inner[b]), dtype=np.int64)
        ]

    def _mul_vec(self, a, b):
        return self.from_inner[
            np.asarray(self.inner.mul_vec(self.to_inner[a], self.to_inner[b]), dtype=np.int64)
        ]

    def _neg_vec(self, a):
        return self.from_inner[np.asarray(self.inner.neg_vec(self.to_inner[a]), dtype=np.int64)]

    def _zero_index(self) -> int:
        return int(self.from_inner[self.inner.zero])

    def _one_index(self) -> int:
        return int(self.from_inner[self.e])

    def lift(self, a: int) -> int:
        """Inner-ring index of corner element ``a``."""
        self._check_index(a)
        return int(self.to_inner[a])

    def compress(self, x: int) -> int:
        """Corner index of e*x*e for inner element ``x``."""
        exe = self.inner.mul(self.inner.mul(self.e, x), self.e)
        return int(self.from_inner[exe])

    def _label(self, a: int) -> str:
        return self.inner.element_label(self.lift(a))


class QuotientRing(FiniteRing):
    """R/I with least-index canonical coset representatives.

    Cosets are ordered by their least member; ``project`` maps inner elements
    to coset indices and ``to_inner`` holds the canonical representatives.
    """

    def __init__(self, inner: FiniteRing, ideal, *, table_cap: int | None = None):
        from .ideals import validate_ideal  # local import to avoid a cycle

        validate_ideal(inner, ideal)
        ideal_arr = np.asarray(sorted(ideal.elements), dtype=np.int64)
        idx = np.arange(inner.order, dtype=np.int64)
        cosets = np.asarray(inner.add_vec(idx[:, None], ideal_arr[None, :]), dtype=np.int64)
        rep = cosets.min(axis=1)
        reps = np.unique(rep)
        self.inner = inner
        self.ideal = ideal
        self.rep = rep
        self.to_inner = reps
        coset_index = np.full(inner.order, -1, dtype=np.int64)
        coset_index[reps] = np.arange(len(reps), dtype=np.int64)
        self.coset_index = coset_index
        construction = QuotientExpr(inner.construction, tuple(ideal.generators))
        super().__init__(len(reps), construction, table_cap)
        self._assert_well_defined()

    def _project_vec(self, x):
        return self.coset_index[self.rep[np.asarray(x, dtype=np.int64)]]

    def _add_vec(self, a, b):
        return self._project_vec(self.inner.add_vec(self.to_inner[a], self.to_inner[b]))

    def _mul_vec(self, a, b):
        return self._project_vec(self.inner.mul_vec(self.to_inner[a], self.to_inner[b]))

    def _neg_vec(self, a):
        return self._project_vec(self.inner.neg_vec(self.to_inner[a]))

    def _zero_index(self) -> int:
        return int(self.coset_index[self.rep[self.inner.zero]])

    def _one_index(self) -> int:
        return int(self.coset_index[self.rep[self.inner.one]])

    def project(self, x: int) -> int:
        """Coset index of inner element ``x`` (the quotient map)."""
        self.inner._check_index(x)
        return int(self._project_vec(np.int64(x)))

    def lift(self, a: int) -> int:
        """Canonical (least) inner representative of coset ``a``."""
        self._check_index(a)
        return int(self.to_inner[a])

    def _assert_well_defined(self) -> None:
        # Coset arithmetic must not depend on representatives.  Exhaustive for
        # table-sized inner rings, sampled otherwise.
        inner = self.inner
        idx = np.arange(inner.order, dtype=np.int64)
        if inner.order <= config.DEFAULT_TABLE_CAP:
            block = max(1, _TABLE_ROW_BLOCK // inner.order)
            for start in range(0, inner.order, block):
                rows = idx[start : start + block, None]
                for op in ("add_vec", "mul_vec"):
                    direct = self._project_vec(getattr(inner, op)(rows, idx[None, :]))
                    via_rep = self._project_vec(
                        getattr(inner, op)(self.rep[rows], self.rep[idx[None, :]])
                    )
                    if not np.array_equal(direct, via_rep):
                        raise ConstructionError(
                            "coset arithmetic is not well defined (not an ideal?)"
                        )
        else:
            rng = np.random.default_rng(0)
            a = rng.integers(0, inner.order, size=4096)
            b = rng.integers(0, inner.order, size=4096)
            for op in ("add_vec", "mul_vec"):
                direct = self._project_vec(getattr(inner, op)(a, b))
                via_rep = self._project_vec(getattr(inner, op)(self.rep[a], self.rep[b]))
                if not np.array_equal(direct, via_rep):
                    raise ConstructionError(
                        "coset arithmetic is not well defined (not an ideal?)"
                    )

    def _label(self, a: int) -> str:
        return self.inner.element_label(self.lift(a))


# -- public constructors -------------------------------------------------------


def make_zmod(n: int, *, size_cap: int | None = None,
              table_cap: int | None = None) -> ZModRing:
    """The residue ring Z/nZ (n >= 1; n = 1 is the zero ring)."""
    if n < 1:
        raise ConstructionError("Z_n requires n >= 1")
    _check_cap(n, size_cap, f"Z{n}")
    cap = _resolved_table_cap(table_cap)
    return _memoized((ZModExpr(n), cap), lambda: ZModRing(n, table_cap=cap))


def make_product(factors, *, size_cap: int | None = None,
                 table_cap: int | None = None) -> ProductRing:
    """Direct product of one or more rings, componentwise arithmetic."""
    factors = tuple(factors)
    if not factors:
        raise ConstructionError("a direct product needs at least one factor")
    required = 1
    for f in factors:
        required *= f.order
    _check_cap(required, size_cap, "direct product")
    cap = _resolved_table_cap(table_cap)
    expr = ProductExpr(tuple(f.construction for f in factors))
    return _memoized((expr, cap), lambda: ProductRing(factors, table_cap=cap))


def make_matrix_ring(inner: FiniteRing, n: int, *, size_cap: int | None = None,
                     table_cap: int | None = None) -> MatrixRing:
    """The full matrix ring of n x n matrices over ``inner``."""
    if n < 1:
        raise ConstructionError("matrix ring requires n >= 1")
    required = inner.order ** (n * n)
    _check_cap(required, size_cap, f"M{n}({inner.spec_text})")
    cap = _resolved_table_cap(table_cap)
    key = (MatrixExpr(n, inner.construction), cap)
    return _memoized(key, lambda: MatrixRing(inner, n, table_cap=cap))


def make_triangular_ring(inner: FiniteRing, n: int, shape: str = "lower", *,
                         size_cap: int | None = None,
                         table_cap: int | None = None) -> TriangularRing:
    """Triangular n x n matrices over ``inner`` (shape 'lower' or 'upper')."""
    if n < 1:
        raise ConstructionError("triangular ring requires n >= 1")
    required = inner.order ** (n * (n + 1) // 2)
    _check_cap(required, size_cap, f"T{n}({inner.spec_text})")
    cap = _resolved_table_cap(table_cap)
    key = (TriangularExpr(n, inner.construction, shape), cap)
    return _memoized(key, lambda: TriangularRing(inner, n, shape, table_cap=cap))


def make_group_ring(inner: FiniteRing, group: GroupSpec, *,
                    construction: RingExpr | None = None,
                    size_cap: int | None = None,
                    table_cap: int | None = None) -> GroupRing:
    """The group ring of ``group`` over ``inner`` (convolution product)."""
    required = inner.order ** group.order
    _check_cap(required, size_cap, "group ring")
    if construction is None:
        m = group.order
        if group == GroupSpec.cyclic(m):
            node = CyclicGroup(m)
        else:
            node = InlineGroup(group.table)
        construction = GroupRingExpr(inner.construction, node)
    cap = _resolved_table_cap(table_cap)
    return _memoized(
        (construction, group.table, cap),
        lambda: GroupRing(inner, group, construction=construction, table_cap=cap),
    )


def make_trunc_poly(inner: FiniteRing, k: int, *, size_cap: int | None = None,
                    table_cap: int | None = None) -> TruncPolyRing:
    """The truncated polynomial ring R[x]/(x^k)."""
    if k < 1:
        raise ConstructionError("truncation order must be >= 1")
    required = inner.order ** k
    _check_cap(required, size_cap, f"{inner.spec_text}[x]/x^{k}")
    cap = _resolved_table_cap(table_cap)
    key = (TruncPolyExpr(inner.construction, k), cap)
    return _memoized(key, lambda: TruncPolyRing(inner, k, table_cap=cap))


def make_corner(inner: FiniteRing, e: int, *,
                table_cap: int | None = None) -> CornerRing:
    """The corner ring eRe for a central idempotent ``e`` of ``inner``."""
    cap = _resolved_table_cap(table_cap)
    key = (CornerExpr(inner.construction, e), cap)
    return _memoized(key, lambda: CornerRing(inner, e, table_cap=cap))
