"""Exception types shared across the package."""


class DegreeError(ValueError):
    """Polynomial degrees do not satisfy an operation's requirements."""


class SimpleRootsError(ValueError):
    """An operation requiring pairwise distinct roots got a repeated root."""


class BracketError(ValueError):
    """Bisection endpoints do not bracket a sign change."""


class AccuracyError(RuntimeError):
    """Adaptive quadrature could not meet the requested tolerance."""


class ConfigError(ValueError):
    """Malformed job configuration or CLI input."""
