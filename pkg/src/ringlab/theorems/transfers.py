"""Witness-level transforms between decompositions.

Each transform re-verifies its output by direct arithmetic before returning
it, so a returned witness is always sound.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..classify import RCleanWitness, r_clean_witness
from ..core.ring import FiniteRing
from ..errors import InvalidWitnessError, TwoNotInvertibleError


@dataclass(frozen=True)
class SqrtWitness:
    """x = t + r with t*t = 1 and r regular (r*y*r = r)."""

    t: int
    r: int
    y: int


def check_rclean_witness(ring: FiniteRing, x: int, w: RCleanWitness) -> None:
    """Raise InvalidWitnessError unless w certifies x = r + e soundly."""
    if ring.add(w.r, w.e) != x:
        raise InvalidWitnessError(f"r + e != x for element {x}")
    if ring.mul(w.e, w.e) != w.e:
        raise InvalidWitnessError(f"e = {w.e} is not idempotent")
    if ring.mul(ring.mul(w.r, w.y), w.r) != w.r:
        raise InvalidWitnessError(f"y = {w.y} is not an inner inverse of r = {w.r}")


def check_sqrt_witness(ring: FiniteRing, x: int, w: SqrtWitness) -> None:
    if ring.add(w.t, w.r) != x:
        raise InvalidWitnessError(f"t + r != x for element {x}")
    if ring.mul(w.t, w.t) != ring.one:
        raise InvalidWitnessError(f"t = {w.t} is not a square root of 1")
    if ring.mul(ring.mul(w.r, w.y), w.r) != w.r:
        raise InvalidWitnessError(f"y = {w.y} is not an inner inverse of r = {w.r}")


def transfer_one_minus_x(ring: FiniteRing, x: int, w: RCleanWitness) -> RCleanWitness:
    """From a witness x = r + e, certify 1 - x = (-r) + (1 - e).

    (-r)(-y)(-r) = -(r y r) = -r, and (1-e)^2 = 1 - e, so the transferred
    triple is itself a sound witness; it is re-checked before returning.
    """
    check_rclean_witness(ring, x, w)
    out = RCleanWitness(ring.neg(w.r), ring.sub(ring.one, w.e), ring.neg(w.y))
    check_rclean_witness(ring, ring.sub(ring.one, x), out)
    return out


def two_inverse(ring: FiniteRing) -> int:
    """The inverse of 2 = 1 + 1, or raise TwoNotInvertibleError."""
    from ..classify import is_unit

    two = ring.add(ring.one, ring.one)
    h = is_unit(ring, two)
    if h is None:
        raise TwoNotInvertibleError(
            f"2 is not a unit in {ring.spec_text}; the square-root "
            "characterization does not apply"
        )
    return h


def sqrt_from_rclean(ring: FiniteRing, x: int, w: RCleanWitness) -> SqrtWitness:
    """Given a witness for (x+1)/2 = r + e, certify x = (2e-1) + 2r.

    The regular part 2r has inner inverse y/2, since
    (2r)(y/2)(2r) = 2(r y r) = 2r, and (2e-1)^2 = 4e - 4e + 1 = 1.
    """
    h = two_inverse(ring)
    s = ring.mul(h, ring.add(x, ring.one))
    check_rclean_witness(ring, s, w)
    two = ring.add(ring.one, ring.one)
    t = ring.sub(ring.mul(two, w.e), ring.one)
    r2 = ring.mul(two, w.r)
    y2 = ring.mul(h, w.y)
    out = SqrtWitness(t, r2, y2)
    check_sqrt_witness(ring, x, out)
    return out


def sqrt_decompose(ring: FiniteRing, x: int) -> SqrtWitness:
    """Decompose x as (square root of 1) + (regular), if 2 is a unit.

    Uses the least-index r-clean witness of (x+1)/2.
    """
    h = two_inverse(ring)
    s = ring.mul(h, ring.add(x, ring.one))
    w = r_clean_witness(ring, s)
    if w is None:
        raise InvalidWitnessError(
            f"element {s} of {ring.spec_text} has no r-clean decomposition"
        )
    return sqrt_from_rclean(ring, x, w)


def rclean_from_sqrt(ring: FiniteRing, x: int, sw: SqrtWitness) -> RCleanWitness:
    """Given 2x - 1 = t + r with t^2 = 1 and r regular, certify x r-clean.

    x = (t+1)/2 + r/2; ((t+1)/2)^2 = (t+1)/2 because t^2 = 1, and
    (r/2)(2y)(r/2) = r/2.
    """
    h = two_inverse(ring)
    two = ring.add(ring.one, ring.one)
    u = ring.sub(ring.mul(two, x), ring.one)
    check_sqrt_witness(ring, u, sw)
    e = ring.mul(h, ring.add(sw.t, ring.one))
    r = ring.mul(h, sw.r)
    y = ring.mul(two, sw.y)
    out = RCleanWitness(r, e, y)
    check_rclean_witness(ring, x, out)
    return out
