"""Default limits and environment-variable fallbacks."""
from __future__ import annotations

import os

# Hard cap on the number of elements of any constructed ring.  Ring-wide
# r-clean scans are O(n^2 * |Id|) in the worst case, so this is a runtime
# guard as much as a memory one.
DEFAULT_SIZE_CAP = 20_000

# Full n x n add/mul tables are memoized only up to this order; larger rings
# compute arithmetic structurally (still vectorized, never per-pair Python).
DEFAULT_TABLE_CAP = 4096

# Ring-law checks are exhaustive (all triples) up to this order, sampled above.
DEFAULT_LAW_EXHAUSTIVE_CAP = 512

# Degree caps for the bounded polynomial searches.
DEFAULT_DEG_F = 2
DEFAULT_DEG_G = 4

# Max number of candidate polynomials one lemma run will enumerate.
DEFAULT_POLY_BUDGET = 20_000

SIZE_CAP_ENV = "RINGLAB_SIZE_CAP"


def effective_size_cap(explicit: int | None = None) -> int:
    """Resolve the size cap: explicit value, else RINGLAB_SIZE_CAP, else default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(SIZE_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_SIZE_CAP
