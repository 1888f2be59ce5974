"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class CostCapError(DomainError):
    """The request exceeds a documented cost cap for a brute-force evaluator."""


class VerificationError(AssertionError):
    """An implementation disagreed with its independent oracle."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
