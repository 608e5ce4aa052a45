"""Exception and warning types shared across the package."""


class InvarError(Exception):
    """Base class for errors raised by this package."""


class InputError(InvarError, ValueError):
    """Malformed or inconsistent input data (files, matrices, fans, tables)."""


class SearchLimitError(InvarError, RuntimeError):
    """A bounded search exceeded its configured node limit."""


class InputWarning(UserWarning):
    """Recoverable input normalization (pruned components, rescaled rays)."""
