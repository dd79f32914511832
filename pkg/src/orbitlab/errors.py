"""Exception types shared across the package."""


class OrbitLabError(Exception):
    """Base class for all orbitlab errors."""


class ConfigurationError(OrbitLabError):
    """A spec, scenario or config describes something we cannot build."""


class InvalidArgumentError(OrbitLabError):
    """An operation was called with inconsistent or malformed arguments."""


class NotThetaStableError(OrbitLabError):
    """The algebra is not closed under conjugate transpose.

    A Cartan decomposition only exists for theta-stable algebras; the
    caller has to conjugate the group into a theta-stable position first.
    """
