"""Exception hierarchy for the platoon simulator."""


class PlatoonError(Exception):
    """Base class for all simulator errors."""


class TooFewWaypoints(PlatoonError):
    pass


class DuplicateWaypoint(PlatoonError):
    pass


class OutOfRange(PlatoonError):
    """Arc-length query outside an open path's domain."""


class ProjectionAmbiguous(PlatoonError):
    """Projection tube violated, or multiple equidistant minima with no hint."""


class NonPositiveDt(PlatoonError):
    pass


class SteeringSaturated(PlatoonError):
    """Requested steering angle exceeds the configured limit."""


class TubeViolation(PlatoonError):
    """Vehicle left the projection-uniqueness tube (1 - chi_r * y_tilde <= 0)."""


class HeadingDomainViolation(PlatoonError):
    """|theta_tilde| reached pi/2; the reversed velocity constraint is undefined."""


class BarrierDomainError(PlatoonError):
    """Safe-mode barrier evaluated with a non-positive safety distance."""


class PreconditionViolation(PlatoonError):
    """Initial conditions violate the safe-mode entry requirements."""


class ParseError(PlatoonError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(PlatoonError):
    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason
