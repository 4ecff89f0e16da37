"""Exception types shared across the lab."""


class LabError(Exception):
    """Base class for all rotolab errors."""


class StreamExhausted(LabError):
    """A partial-quotient stream cannot supply enough terms (too short, or
    growing too slowly to satisfy a selection inequality within the scan
    budget)."""


class CertificateNotFound(LabError):
    """No denominator below the cap certifies the requested smallness."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"no certificate found for exponent k={order}")


class InvalidConfig(LabError):
    """A run configuration violates a structural constraint."""


class IntegrationFailure(LabError):
    """The implicit solver or return detection did not converge in budget."""


class OutOfDomain(LabError):
    """A point lies outside the map's domain (or too close to a boundary
    for the requested finite-difference stencil)."""


class ModeError(LabError):
    """Operation not defined for this manifold mode."""


class EmptyIntersection(LabError):
    """An atom has empty intersection with the agreement set."""


class PreconditionViolated(LabError):
    """A documented precondition (e.g. q > d*n^2) does not hold."""


class StepTooLarge(LabError):
    """Richardson consistency check failed for the finite-difference step."""


class OrderCapExceeded(LabError):
    """A certificate was demanded at an order above the configured cap."""


class InsufficientStages(LabError):
    """The requested report needs more built stages."""


class MissingStage(LabError):
    """A stage file is absent from the run directory."""


class UnsupportedDimension(LabError):
    """Raster output is only available in dimension 2."""
