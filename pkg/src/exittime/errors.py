"""Exception types shared across the package."""


class ExitTimeError(Exception):
    """Base class for all package errors."""


class ToleranceUnreachable(ExitTimeError):
    """No certified error bound could be produced within the term budget.

    Carries the uncertified partial sum so callers can still inspect it.
    """

    def __init__(self, message: str, partial_sum: float, terms_used: int):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.terms_used = terms_used


class DivergentSeries(ExitTimeError):
    """A series evaluation was requested where the series provably diverges."""


class DegenerateMap(ExitTimeError):
    """Normalization requires a nonzero first Taylor coefficient."""


class BasePointOutside(ExitTimeError, ValueError):
    """Requested base point does not lie in the domain."""


class UnsupportedParameter(ExitTimeError, ValueError):
    """Domain parameter outside the supported range."""


class DomainError(ExitTimeError, ValueError):
    """Argument outside the domain of a special function (e.g. gamma at x <= 0)."""


class StartOutsideDomain(ExitTimeError, ValueError):
    """Monte Carlo start point is not inside the domain."""


class IneligibleDomain(ExitTimeError):
    """Domain cannot be simulated (unbounded with infinite expected exit time)."""


class MissingDerivative(ExitTimeError):
    """Green's-function quadrature needs a derivative evaluator."""
