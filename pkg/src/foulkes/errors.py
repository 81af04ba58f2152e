"""Shared exception types.

``GuardError`` marks a refused computation (resource guard exceeded); the
CLI maps it to exit code 1.  ``ConsistencyError`` marks a failed internal
cross-check, i.e. two routes that must agree did not; the CLI maps it to
exit code 3.
"""


class GuardError(ValueError):
    """A configured resource guard was exceeded."""


class ConsistencyError(RuntimeError):
    """An internal consistency check failed (this is a bug, not bad input)."""
