"""Exception types raised by bernstein_kit."""


class RangeError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class DivergenceError(ValueError):
    """A series is evaluated where it does not converge."""


class NotDivisible(ValueError):
    """Exact division of a Bernstein-form polynomial is impossible."""


class InconsistentSystem(ArithmeticError):
    """No weight sequence satisfies the generating-function premise."""


class TruncationError(ArithmeticError):
    """A truncated infinite sum has a tail larger than the requested tolerance."""
