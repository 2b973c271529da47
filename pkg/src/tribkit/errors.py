"""Exception types shared across the package."""


class DivisibilityViolation(ArithmeticError):
    """An exact division guaranteed by a theorem left a remainder.

    Raised when a quantity that is provably divisible (by 22, or by the
    summation divisor K(m) - K(-m)) turns out not to be.  Always signals
    an implementation bug, never bad user input.
    """


class PrecisionExhausted(ArithmeticError):
    """A floating Binet value could not be rounded to an integer safely.

    The requested index is too large for the working precision; retry
    with more bits.
    """


class NegativeExponent(ValueError):
    """Matrix exponentiation requested with a negative exponent."""


class DegenerateDenominator(ZeroDivisionError):
    """Closed-form summation divisor K(m) - K(-m) vanished."""


class UnknownIdentity(KeyError):
    """Identity id not present in the registry."""


class StrategyMismatch(RuntimeError):
    """Benchmark strategies disagreed on a value they must all reproduce."""
