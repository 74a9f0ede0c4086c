"""Ring-axiom checking: exhaustive on small rings, sampled on large ones."""
from __future__ import annotations

import numpy as np

from .. import config
from .ring import FiniteRing

_BLOCK = 1 << 20


def check_ring_laws(ring: FiniteRing, *, exhaustive_cap: int | None = None,
                    samples: int = 20_000, seed: int = 0) -> list[str]:
    """Check the ring axioms; return a list of violation descriptions.

    All pair laws (commutativity of +, identities, inverses) are always
    exhaustive.  Triple laws (associativity, distributivity) are exhaustive
    for order <= ``exhaustive_cap`` (default 512) and checked on ``samples``
    seeded random triples above that.
    """
    cap = config.DEFAULT_LAW_EXHAUSTIVE_CAP if exhaustive_cap is None else exhaustive_cap
    n = ring.order
    idx = np.arange(n, dtype=np.int64)
    violations: list[str] = []

    # Pair laws, exhaustive (blocked rows to bound memory).
    block = max(1, _BLOCK // n)
    for start in range(0, n, block):
        rows = idx[start : start + block]
        a = rows[:, None]
        b = idx[None, :]
        ab = np.asarray(ring.add_vec(a, b), dtype=np.int64)
        ba = np.asarray(ring.add_vec(b, a), dtype=np.int64)
        if not np.array_equal(ab, ba):
            violations.append("addition is not commutative")
    zero = np.int64(ring.zero)
    one = np.int64(ring.one)
    if not np.array_equal(np.asarray(ring.add_vec(idx, zero), dtype=np.int64), idx):
        violations.append("zero is not an additive identity")
    negs = ring.neg_vec(idx)
    if not np.all(np.asarray(ring.add_vec(idx, negs), dtype=np.int64) == ring.zero):
        violations.append("neg is not an additive inverse")
    if not np.array_equal(np.asarray(ring.mul_vec(idx, one), dtype=np.int64), idx):
        violations.append("one is not a right multiplicative identity")
    if not np.array_equal(np.asarray(ring.mul_vec(one, idx), dtype=np.int64), idx):
        violations.append("one is not a left multiplicative identity")
    if n > 1 and ring.one == ring.zero:
        violations.append("one equals zero in a ring of order > 1")

    def triple_laws(a, b, c):
        checks = []
        ab = ring.add_vec(a, b)
        bc = ring.add_vec(b, c)
        checks.append(("addition is not associative",
                       np.asarray(ring.add_vec(ab, c)) != np.asarray(ring.add_vec(a, bc))))
        mab = ring.mul_vec(a, b)
        mbc = ring.mul_vec(b, c)
        checks.append(("multiplication is not associative",
                       np.asarray(ring.mul_vec(mab, c)) != np.asarray(ring.mul_vec(a, mbc))))
        checks.append(("left distributivity fails",
                       np.asarray(ring.mul_vec(a, bc))
                       != np.asarray(ring.add_vec(ring.mul_vec(a, b), ring.mul_vec(a, c)))))
        checks.append(("right distributivity fails",
                       np.asarray(ring.mul_vec(ab, c))
                       != np.asarray(ring.add_vec(ring.mul_vec(a, c), ring.mul_vec(b, c)))))
        return checks

    if n <= cap:
        for a_val in range(n):
            a = np.int64(a_val)
            b = idx[:, None]
            c = idx[None, :]
            for name, bad in triple_laws(a, b, c):
                if bad.any() and name not in violations:
                    violations.append(name)
    else:
        rng = np.random.default_rng(seed)
        a = rng.integers(0, n, size=samples)
        b = rng.integers(0, n, size=samples)
        c = rng.integers(0, n, size=samples)
        for name, bad in triple_laws(a, b, c):
            if bad.any() and name not in violations:
                violations.append(name)

    return violations
