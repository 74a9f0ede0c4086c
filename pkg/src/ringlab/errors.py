"""Exception types shared across the package."""
from __future__ import annotations


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class ConstructionError(RingLabError):
    """A ring (or group) construction received invalid arguments."""


class SizeCapExceeded(ConstructionError):
    """A construction would exceed the configured element-count cap."""

    def __init__(self, required: int, cap: int, what: str = "ring"):
        self.required = required
        self.cap = cap
        self.what = what
        super().__init__(
            f"{what} would have {required} elements, exceeding the size cap of {cap}"
        )


class ZeroRingError(RingLabError):
    """An operation defined only for nonzero rings was given the zero ring."""


class TwoNotInvertibleError(RingLabError):
    """An operation requiring 2 to be a unit was given a ring where it is not."""


class InvalidWitnessError(RingLabError):
    """A witness passed into a transform does not certify what it claims."""


class SearchBudgetExceeded(RingLabError):
    """A bounded search was asked to cover a space larger than its budget."""


class ParseError(RingLabError):
    """Ring-spec text could not be parsed.

    Attributes:
        position: character offset of the offending token (0-based; equals
            the input length when the error is at end of input).
        expected: the set of token descriptions that would have been accepted.
        found: the text of the offending token ("end of input" at EOF).
    """

    def __init__(self, position: int, expected: frozenset[str], found: str, message: str):
        self.position = position
        self.expected = frozenset(expected)
        self.found = found
        self.message = message
        super().__init__(f"at position {position}: {message}")


class ElaborationError(RingLabError):
    """A parsed ring expression is semantically invalid.

    Carries the printed form of the failing sub-expression.
    """

    def __init__(self, message: str, expr_text: str):
        self.expr_text = expr_text
        super().__init__(f"{expr_text}: {message}")
