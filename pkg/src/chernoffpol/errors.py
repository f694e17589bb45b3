class ValidationError(ValueError):
    """Input violates a stated invariant; the message names the invariant."""


class NumericalError(RuntimeError):
    """A numerical procedure could not produce a result (no sign change, no convergence)."""


class InfiniteExponent(ArithmeticError):
    """The states have orthogonal supports, so the Chernoff exponent is +inf."""
