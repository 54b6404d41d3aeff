"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the documented domain of an operation."""


class NumericError(ArithmeticError):
    """A numerical routine produced a result that cannot be trusted."""


class DegenerateOutcomeError(DomainError):
    """A projection outcome carries numerically zero probability."""
