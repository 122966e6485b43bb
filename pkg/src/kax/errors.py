"""Exception types shared across the package."""


class KaxError(Exception):
    """Base class for package errors."""


class BudgetExceededError(KaxError):
    """An enumeration would exceed the configured work budget."""


class InternalError(KaxError):
    """An identity the implementation relies on failed to hold.

    Raised e.g. when a Mobius sum is not divisible by the period, or a
    Witt structure polynomial comes out non-integral.  Always a bug.
    """
