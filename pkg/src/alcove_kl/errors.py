"""Exception types shared across the package.

The CLI maps these to exit codes: ConfigError -> 2, StabilizationError
(and WindowError) -> 3, ConsistencyError -> 4.
"""


class ConfigError(ValueError):
    """Invalid configuration (unsupported type/rank, bad prime, ...)."""


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class ResourceError(RuntimeError):
    """A configured bound (length, window, ...) was exceeded."""


class WindowError(ResourceError):
    """An element falls outside the reach of the configured window."""


class StabilizationError(RuntimeError):
    """A window-truncated value did not agree between consecutive radii."""


class ConsistencyError(RuntimeError):
    """An internal identity failed; carries a convention diagnostic."""


class SearchError(RuntimeError):
    """A bounded search was exhausted without finding a witness."""


class IndeterminateError(RuntimeError):
    """A bounded order query could not be decided within its radius."""
