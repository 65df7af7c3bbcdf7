"""Exception types shared across the library."""


class RevolveError(Exception):
    """Base class for all library errors."""


class ExprSyntaxError(RevolveError):
    """Malformed expression text.

    `position` is the byte offset (UTF-8) at which the problem was detected.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownIdentifierError(ExprSyntaxError):
    """Identifier that is not the declared variable, a function, or a constant."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown identifier {name!r}", position)
        self.name = name


class DomainError(RevolveError):
    """Evaluation left the real domain (sqrt of a negative, log of a
    non-positive, division by zero, or a non-finite result)."""


class InvalidAxisError(RevolveError):
    """Axis coefficients do not describe a line (a = b = 0, or non-finite)."""


class InvalidRegionError(RevolveError):
    """Region description violates a construction invariant."""


class QuadratureNoConvergence(RevolveError):
    """Adaptive subdivision hit its depth limit with the tolerance unmet."""


class IntegrandError(RevolveError):
    """Integrand undefined at a point in the interior of the interval."""


class AxisIntersectsRegion(RevolveError):
    """The axis of revolution passes through the interior of the region."""


class UnsupportedMethod(RevolveError):
    """Requested volume method does not apply to this region/axis shape."""


class ConfigError(RevolveError):
    """Aggregated job-configuration validation failure.

    `issues` is a list of (field_path, message) pairs covering every problem
    found, so a bad config is reported in one pass.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        lines = "; ".join(f"{path}: {msg}" for path, msg in self.issues)
        super().__init__(lines or "invalid configuration")
