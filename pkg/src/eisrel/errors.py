"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class VerificationError(ArithmeticError):
    """An identity or membership check failed on exact data."""


class NotInSpanError(VerificationError):
    """Target series is not a linear combination of the basis elements."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InsufficientPrecisionError(DomainError):
    pass
