"""Two-sided ideals: closure from generators, validation, quotients."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConstructionError
from .ring import FiniteRing, QuotientRing


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal as an explicit element set plus its generators."""

    elements: frozenset[int]
    generators: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


def ideal_closure(ring: FiniteRing, generators) -> Ideal:
    """Least two-sided ideal of ``ring`` containing ``generators``.

    Closes under addition, negation and two-sided multiplication by every
    ring element.  Fixed-point iteration terminates because the ring is
    finite; the additive closure of R*g*R already absorbs negation (in a
    finite abelian group -t is a positive multiple of t).
    """
    gens = tuple(int(g) for g in generators)
    for g in gens:
        ring._check_index(g)
    idx = np.arange(ring.order, dtype=np.int64)
    # All products r*g*s, vectorized one generator at a time.
    seeds = {ring.zero}
    for g in gens:
        rg = np.asarray(ring.mul_vec(idx, np.int64(g)), dtype=np.int64)
        rgs = np.asarray(ring.mul_vec(rg[:, None], idx[None, :]), dtype=np.int64)
        seeds.update(int(v) for v in np.unique(rgs))
    member = np.zeros(ring.order, dtype=bool)
    member[ring.zero] = True
    members = [ring.zero]
    queue = sorted(seeds)
    while queue:
        t = queue.pop()
        if member[t]:
            continue
        member[t] = True
        sums = np.asarray(
            ring.add_vec(np.int64(t), np.asarray(members, dtype=np.int64)),
            dtype=np.int64,
        )
        members.append(t)
        for v in np.unique(sums):
            if not member[v]:
                queue.append(int(v))
    return Ideal(frozenset(int(i) for i in np.nonzero(member)[0]), gens)


def validate_ideal(ring: FiniteRing, ideal: Ideal) -> None:
    """Raise ConstructionError unless ``ideal`` really is a two-sided ideal."""
    elems = np.asarray(sorted(ideal.elements), dtype=np.int64)
    if elems.size == 0 or ring.zero not in ideal.elements:
        raise ConstructionError("an ideal must contain zero")
    member = np.zeros(ring.order, dtype=bool)
    member[elems] = True
    sums = np.asarray(ring.add_vec(elems[:, None], elems[None, :]), dtype=np.int64)
    if not member[sums].all():
        raise ConstructionError("ideal is not closed under addition")
    negs = np.asarray(ring.neg_vec(elems), dtype=np.int64)
    if not member[negs].all():
        raise ConstructionError("ideal is not closed under negation")
    idx = np.arange(ring.order, dtype=np.int64)
    left = np.asarray(ring.mul_vec(idx[:, None], elems[None, :]), dtype=np.int64)
    right = np.asarray(ring.mul_vec(elems[:, None], idx[None, :]), dtype=np.int64)
    if not member[left].all():
        raise ConstructionError("ideal is not closed under left multiplication")
    if not member[right].all():
        raise ConstructionError("ideal is not closed under right multiplication")


def make_quotient(inner: FiniteRing, ideal: Ideal, *,
                  table_cap: int | None = None) -> QuotientRing:
    """The factor ring R/I with least-index canonical representatives."""
    return QuotientRing(inner, ideal, table_cap=table_cap)
