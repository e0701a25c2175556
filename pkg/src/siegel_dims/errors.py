"""Exception hierarchy.

Two families matter to callers: ``InputError`` covers everything a user can
trigger with bad arguments (the CLI maps it to exit status 1), while
``IntegralityError`` signals that an exact-rational computation failed to
collapse to an integer where the mathematics guarantees one (exit status 2;
always a bug in our tables or formulas, never a user mistake).
"""


class SiegelDimsError(Exception):
    """Base class for everything raised by this package."""


class InputError(SiegelDimsError, ValueError):
    """A precondition on user-supplied arguments was violated."""


class EvenLevelError(InputError):
    """An even level was passed where an odd one is required."""


class NotSquareFreeError(InputError):
    """A level with a repeated prime factor was passed.

    ``prime`` is the offending repeated prime.
    """

    def __init__(self, level: int, prime: int):
        super().__init__(f"level {level} is not square-free: {prime}^2 divides it")
        self.level = level
        self.prime = prime


class NotPrimeError(InputError):
    """A composite number was passed where a prime is required."""


class EvenPrimeError(InputError):
    """p = 2 (or another even number) was passed where an odd prime is required."""


class WeightOutOfRangeError(InputError):
    """The weight is below the validity range of the requested formula."""


class NotTabulatedError(InputError):
    """The requested value is outside the embedded reference tables and no
    formula for it is implemented."""


class IndexOutOfRangeError(InputError):
    """A representation index outside 1..17 was requested."""


class TooManySolutionsError(InputError):
    """Exhaustive enumeration was aborted because the solution set is (or
    would be) larger than the configured cap.

    ``count`` carries the exact solution count when it was cheap to compute,
    else ``None``.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class IntegralityError(SiegelDimsError, ArithmeticError):
    """An exact rational that must reduce to a non-negative integer did not."""
