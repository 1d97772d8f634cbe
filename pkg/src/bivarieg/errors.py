"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or growth cap was exceeded (CLI exit code 3)."""
