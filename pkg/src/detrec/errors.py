"""Exceptions shared across the library."""


class NotDivisible(ArithmeticError):
    """Exact polynomial division has a nonzero remainder."""


class UnassignedVariable(LookupError):
    """A substitution is missing a variable that occurs in the polynomial."""


class TooLarge(ValueError):
    """An enumeration or determinant request exceeds its size cap."""


class InvalidCycleType(ValueError):
    """A cycle type does not fit the given matrix size or band width."""


class DimensionTooSmall(ValueError):
    """A matrix or board constructor requires a larger dimension."""


class ExactDivisionFailure(ArithmeticError):
    """An internal division in fraction-free elimination was not exact.

    This signals an implementation bug: on integral-domain scalars every
    pivot division in the elimination is exact.
    """
