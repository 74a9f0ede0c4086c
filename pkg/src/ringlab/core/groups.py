"""Finite groups given by explicit Cayley tables."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConstructionError


@dataclass(frozen=True)
class GroupSpec:
    """A finite group: an m x m Cayley table on indices 0..m-1.

    ``table[i][j]`` is the index of the product of elements i and j.  The
    identity index is stored explicitly.  Use :meth:`from_table` to validate
    an arbitrary table; :meth:`cyclic` builds C_n directly.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.table)

    @staticmethod
    def cyclic(n: int) -> "GroupSpec":
        if n < 1:
            raise ConstructionError("cyclic group order must be >= 1")
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return GroupSpec(table, 0)

    @staticmethod
    def from_table(rows) -> "GroupSpec":
        """Validate a Cayley table: associativity, identity and inverses."""
        table = tuple(tuple(int(v) for v in row) for row in rows)
        m = len(table)
        if m == 0:
            raise ConstructionError("Cayley table is empty")
        for row in table:
            if len(row) != m:
                raise ConstructionError("Cayley table is not square")
            for v in row:
                if not 0 <= v < m:
                    raise ConstructionError(f"Cayley table entry {v} out of range 0..{m - 1}")
        identity = None
        for e in range(m):
            if all(table[e][j] == j for j in range(m)) and all(
                table[i][e] == i for i in range(m)
            ):
                identity = e
                break
        if identity is None:
            raise ConstructionError("Cayley table has no two-sided identity")
        for a in range(m):
            if identity not in table[a]:
                raise ConstructionError(f"group element {a} has no inverse")
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ConstructionError(
                            f"Cayley table not associative at ({a},{b},{c})"
                        )
        return GroupSpec(table, identity)

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)
