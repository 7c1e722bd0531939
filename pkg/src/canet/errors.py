"""Exception hierarchy shared across the package.

Each class maps to one CLI exit code (see cli.EXIT_*): usage/config errors
exit 2, data errors exit 3, numerical failures exit 4.
"""


class CanetError(Exception):
    """Base class for all package errors."""


class DimensionError(CanetError, ValueError):
    """Tensor shapes incompatible with the requested operation."""


class ParameterError(CanetError, ValueError):
    """An argument value is outside its documented domain."""


class DataError(CanetError, ValueError):
    """Dataset content is malformed (bad file, label out of range, ...)."""


class UsageError(CanetError, RuntimeError):
    """An API was called in an unsupported way (e.g. backward twice)."""


class ConfigError(CanetError, ValueError):
    """Run configuration is invalid or inconsistent."""


class NumericalError(CanetError, ArithmeticError):
    """A computation produced NaN/Inf or failed a numerical check."""
