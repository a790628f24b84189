"""Exception types shared across the package.

Mathematical precondition failures raise subclasses of ToricDegError so the
CLI can map them to a dedicated exit code; malformed input is SchemaError.
"""


class ToricDegError(Exception):
    """Base class for all domain errors."""


class SchemaError(ToricDegError):
    """Input file or request does not match the documented schema."""


class UnboundedError(ToricDegError):
    """Polytope operation requires a bounded polytope."""


class EmptyPolytopeError(ToricDegError):
    """Polytope operation requires a nonempty polytope."""


class LowerDimensionalError(ToricDegError):
    """Operation requires a full-dimensional polytope."""


class NotIntegralError(ToricDegError):
    """Operation requires a polytope with integer vertices."""


class NotSmoothError(ToricDegError):
    """Polytope fails the smoothness test at some vertex."""


class NotNormalError(ToricDegError):
    """Polytope fails the normality (lattice decomposition) test."""


class DependentBasisError(ToricDegError):
    """Valuation image requested for a linearly dependent family."""


class ZeroPolynomialError(ToricDegError):
    """Valuation of the zero polynomial is undefined."""


class ZeroOrbitError(ToricDegError):
    """Weight pairs to zero with every coroot."""


class NotQTrivialError(ToricDegError):
    """Bott data is not rationally trivial."""


class MoveError(ToricDegError):
    """Requested degeneration move is not available for this data."""
