"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class BranchAmbiguityError(DomainError):
    """Two branches of a multivalued inverse coincide in modulus but differ.

    Both candidates are kept on ``candidates`` so callers can pick one.
    """

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = tuple(candidates)


class NumericError(ArithmeticError):
    """A numerical estimate is unusable (e.g. a non-positive Jacobian)."""


class ConvergenceError(NumericError):
    """An iterative solver stopped before meeting its tolerance."""

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual
