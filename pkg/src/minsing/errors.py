"""Exception types shared across the package."""


class MinsingError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(MinsingError):
    """Unsupported root-system type or rank."""


class DomainError(MinsingError):
    """An argument violates an operation's precondition."""


class SearchExhaustedError(MinsingError):
    """The layer search hit its depth cap without finding a nonzero layer."""

    def __init__(self, max_depth: int, message: str | None = None):
        self.max_depth = max_depth
        super().__init__(message or f"no nonzero layer found for depth <= {max_depth}")


class InternalConsistencyError(MinsingError):
    """A structural guarantee failed; indicates a bug, not bad input."""


class AssemblyError(MinsingError):
    """Report assembly was given inconsistent or incomplete data."""
