"""Exception hierarchy shared by every module."""


class HypmutError(Exception):
    pass


class DomainError(HypmutError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class CollarDomainError(DomainError):
    """k(length) >= 1/2, so the collar formula has no real solution."""


class UsageError(HypmutError, ValueError):
    pass


class NumericalError(HypmutError, ArithmeticError):
    """A root finder, quadrature or Newton solve failed to converge.

    ``residual`` carries the last residual (or residual trace) for reporting.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ValidityError(HypmutError):
    """The hypotheses of a cited bound are not met by the computed value."""


class ConsistencyError(NumericalError):
    """Two independent constructions of the same object disagree."""


class SizeGuardError(HypmutError):
    pass
