"""Exception types raised across the package."""


class GaussLabError(ValueError):
    """Base class for all domain errors raised by gausslab."""


class DomainError(GaussLabError):
    """A parameter lies outside the domain where a formula is defined."""


class UnphysicalError(GaussLabError):
    """A state or channel violates the uncertainty principle."""


class UnsupportedStateError(GaussLabError):
    """The state is outside the family an operation supports."""


class CutoffError(GaussLabError):
    """A Fock-space truncation is too small for the requested tolerance.

    ``suggested`` holds a cutoff that would satisfy the tolerance, when one
    can be estimated.
    """

    def __init__(self, message, suggested=None):
        super().__init__(message)
        self.suggested = suggested
