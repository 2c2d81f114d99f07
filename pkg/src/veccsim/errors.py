"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A scenario configuration is malformed or inconsistent (CLI exit code 2)."""


class PreconditionError(ValueError):
    """An operation was invoked outside its supported range (CLI exit code 3)."""


class ProtocolViolation(RuntimeError):
    """An agent sent a request the protocol forbids; signals a bug, not bad input."""
