"""Exception types shared across the package."""


class LevelMetricError(Exception):
    """Base class for all levelmetric errors."""


class ParseError(LevelMetricError):
    """Syntax error in a field expression.

    Carries the byte offset of the offending token in ``offset``.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class DomainError(LevelMetricError):
    """Evaluation outside the domain of an elementary function, or a jet
    request at a point where the field is not differentiable."""


class NearCriticalError(LevelMetricError):
    """Pointwise quantity requested too close to a critical point
    (|grad f| below the floor)."""


class CriticalValueError(LevelMetricError):
    """A slice operation was asked for a critical value of the field."""


class NonCompactError(LevelMetricError):
    """A level set or band region reaches the computational window
    boundary, so compactness cannot be certified."""


class NotClosedError(LevelMetricError):
    """Operation requires a closed polyline component."""


class NotJordanError(LevelMetricError):
    """Curve does not bound a Jordan domain at the working resolution."""


class FlowError(LevelMetricError):
    """Gradient-flow transport failed: the path came too close to a
    critical point or the level defect exceeded tolerance."""


class DivergenceSuspected(LevelMetricError):
    """Excised integrals do not behave linearly in the excision radius;
    the improper integral may diverge."""


class DegreeMismatchError(LevelMetricError):
    """Scaling limits are inconsistent with the requested homogeneous
    degree (lower-order terms not negligible)."""


class NonConvergenceError(LevelMetricError):
    """An iterative solve (Newton) failed to converge."""


class SelfIntersectionError(LevelMetricError):
    """A polyline operation produced or detected a self-intersecting curve."""


class NonConvexInputError(LevelMetricError):
    """Operation requires a convex input curve."""


class StepUnstableError(LevelMetricError):
    """An explicit evolution step behaved unstably (length grew)."""


class OpenSurfaceError(LevelMetricError):
    """Extracted level surface is not closed inside the window."""


class PreconditionError(LevelMetricError):
    """A documented precondition of an operation does not hold for the
    given input; the operation refuses rather than returning garbage."""
