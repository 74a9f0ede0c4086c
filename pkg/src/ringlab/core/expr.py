"""Ring-construction expression trees and their canonical printer.

A ``RingExpr`` records how a ring was built; it is the provenance tag every
``FiniteRing`` carries and the value the DSL parser produces.  ``print_expr``
emits the canonical text form, chosen so that parsing the output of
``print_expr`` reproduces the expression exactly for every expression the
grammar can produce.
"""
from __future__ import annotations

from dataclasses import dataclass


class RingExpr:
    """Base class for ring-construction AST nodes."""

    __slots__ = ()


class GroupNode:
    """Base class for the group argument of a group-ring node."""

    __slots__ = ()


@dataclass(frozen=True)
class CyclicGroup(GroupNode):
    n: int


@dataclass(frozen=True)
class FileGroup(GroupNode):
    """A group given by an external Cayley-table file (JSON, key "table")."""

    path: str


@dataclass(frozen=True)
class InlineGroup(GroupNode):
    """A group handed in directly as a Cayley table (no textual syntax)."""

    table: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ZModExpr(RingExpr):
    n: int


@dataclass(frozen=True)
class ProductExpr(RingExpr):
    factors: tuple[RingExpr, ...]


@dataclass(frozen=True)
class MatrixExpr(RingExpr):
    n: int
    inner: RingExpr


@dataclass(frozen=True)
class TriangularExpr(RingExpr):
    n: int
    inner: RingExpr
    shape: str  # "lower" | "upper"


@dataclass(frozen=True)
class GroupRingExpr(RingExpr):
    inner: RingExpr
    group: GroupNode


@dataclass(frozen=True)
class TruncPolyExpr(RingExpr):
    inner: RingExpr
    k: int


@dataclass(frozen=True)
class CornerExpr(RingExpr):
    inner: RingExpr
    idempotent: int


@dataclass(frozen=True)
class QuotientExpr(RingExpr):
    inner: RingExpr
    generators: tuple[int, ...]


def _term(expr: RingExpr) -> str:
    # Products bind loosest; wrap them when they appear in term position.
    text = print_expr(expr)
    if isinstance(expr, ProductExpr):
        return f"({text})"
    return text


def _group_text(group: GroupNode) -> str:
    if isinstance(group, CyclicGroup):
        return f"C{group.n}"
    if isinstance(group, FileGroup):
        return f'"{group.path}"'
    if isinstance(group, InlineGroup):
        # No textual syntax for inline tables; emit a cyclic form when the
        # table happens to be the canonical cyclic one, a marker otherwise.
        m = len(group.table)
        cyclic = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
        if group.table == cyclic:
            return f"C{m}"
        return f"cayley<{m}>"
    raise TypeError(f"unknown group node {group!r}")


def print_expr(expr: RingExpr) -> str:
    """Canonical text of a ring expression (inverse of the DSL parser)."""
    if isinstance(expr, ZModExpr):
        return f"Z{expr.n}"
    if isinstance(expr, ProductExpr):
        return " x ".join(_term(f) for f in expr.factors)
    if isinstance(expr, MatrixExpr):
        return f"M{expr.n}({print_expr(expr.inner)})"
    if isinstance(expr, TriangularExpr):
        suffix = "^upper" if expr.shape == "upper" else ""
        return f"T{expr.n}({print_expr(expr.inner)}){suffix}"
    if isinstance(expr, GroupRingExpr):
        return f"{_term(expr.inner)}[{_group_text(expr.group)}]"
    if isinstance(expr, TruncPolyExpr):
        return f"{_term(expr.inner)}[x]/x^{expr.k}"
    if isinstance(expr, CornerExpr):
        return f"corner({print_expr(expr.inner)}, {expr.idempotent})"
    if isinstance(expr, QuotientExpr):
        gens = ",".join(str(g) for g in expr.generators)
        return f"{_term(expr.inner)}/({gens})"
    raise TypeError(f"unknown ring expression {expr!r}")
