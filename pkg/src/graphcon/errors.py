"""Exception hierarchy shared by all engines."""

from __future__ import annotations


class GraphconError(Exception):
    """Base class for every error raised by this package."""


class InvalidPointError(GraphconError):
    """A point reference does not belong to the space it was used with."""


class InstanceFormatError(GraphconError):
    """An instance document is malformed or of an unsupported kind."""


class MetricAxiomError(GraphconError):
    """A distance matrix violates one of the metric axioms.

    Subclasses carry the witnessing indices in ``indices``.
    """

    def __init__(self, message: str, indices: tuple = ()):
        super().__init__(message)
        self.indices = indices


class NonSquareError(MetricAxiomError):
    pass


class NegativeEntryError(MetricAxiomError):
    pass


class IdentityViolationError(MetricAxiomError):
    pass


class SymmetryViolationError(MetricAxiomError):
    pass


class TriangleViolationError(MetricAxiomError):
    pass


class GammaOutOfRangeError(GraphconError):
    """Geometric ratio outside [0, 1); the tail bound is undefined there."""


class NotConvergedError(GraphconError):
    """A residue subsequence failed to settle within the iteration budget.

    Happens when the map does not contract (empirical step ratios at or
    above 1) or when the underlying space has no limit to converge to.
    """

    def __init__(self, residue: int, last_step, gamma_hat):
        super().__init__(
            f"subsequence {residue} did not converge "
            f"(last step {last_step}, ratio estimate {gamma_hat})"
        )
        self.residue = residue
        self.last_step = last_step
        self.gamma_hat = gamma_hat


class ToleranceAmbiguityError(GraphconError):
    """Limit clustering could not pick a period consistently.

    Either no divisor-length cyclic shift matches the limits within the
    cluster tolerance, or the chosen block still contains a pair closer
    than that tolerance. Signals a mis-set tolerance, never a valid
    solver outcome.
    """


class ConsistencyViolationError(GraphconError):
    """The computed limits do not chain under the map within tolerance."""


class UnknownIdError(GraphconError):
    """Gallery id is not one of the built-in cases."""


class BadParamsError(GraphconError):
    """Parameters are outside the valid range (e.g. a >= b)."""
