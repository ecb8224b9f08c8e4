"""Exception hierarchy for the convac package.

Every numerical guard in the package raises one of these, so callers (and the
CLI) can distinguish "the input violates a contract" from genuine bugs.
"""


class ConvacError(Exception):
    """Base class for all package-specific errors."""


class PotentialInvalid(ConvacError):
    """Double-well potential violates the standing assumptions."""


class CurveDegenerate(ConvacError):
    """Curve parameterization lost regularity or the curve self-intersects."""


class ProjectionAmbiguous(ConvacError):
    """Query point lies outside the certified tubular neighborhood."""


class ChartSingular(ConvacError):
    """Tubular chart Jacobian is (numerically) singular."""


class TransportViolated(ConvacError):
    """Curve history is inconsistent with pure transport by the velocity field."""


class CFLViolated(ConvacError):
    """Characteristic displacement per step too large for accurate tracing."""


class EliminationFailed(ConvacError):
    """A quantity that should vanish by construction does not."""


class SolvabilityViolated(ConvacError):
    """Compatibility integral of the layer ODE right-hand side is nonzero."""


class SingularSystem(ConvacError):
    """Deflated linear system could not be solved."""


class LinearSolveDiverged(ConvacError):
    """Iterative linear solver failed to reach the requested tolerance."""


class NonFinite(ConvacError):
    """A field developed NaN or Inf entries."""


class ResolutionInsufficient(ConvacError):
    """Grid too coarse relative to the interface thickness."""


class EigenIterationStalled(ConvacError):
    """Eigenvalue iteration did not converge within the iteration budget."""


class GridMismatch(ConvacError):
    """Fields that must share a grid or time axis do not."""


class DegenerateFit(ConvacError):
    """Convergence-order fit is impossible (too few points or zero norms)."""


class ConfigError(ConvacError):
    """Study configuration file is missing, malformed, or inconsistent."""
