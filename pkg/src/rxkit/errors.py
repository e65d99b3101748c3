"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: InputError (and subclasses) exit 1,
ConfigError exits 2, anything else is an internal error and exits 3.
"""


class RxkitError(Exception):
    """Base class for all toolkit errors."""


class InputError(RxkitError, ValueError):
    """Malformed or inconsistent input data (frames, files, records)."""


class FormatError(InputError):
    """A text input violates its schema; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PairingError(InputError):
    """Two datasets that must match key-for-key do not."""


class ConfigError(RxkitError, ValueError):
    """Invalid run configuration (sweep config files, CLI parameters)."""
