"""Shared exception types and process exit codes."""

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_INVALID = 4
EXIT_INTERNAL = 5


class OrdalexError(Exception):
    """Base class for errors raised by this package."""

    exit_code = EXIT_INTERNAL


class PresentationParseError(OrdalexError):
    """Malformed presentation text; carries a 1-based line/column."""

    exit_code = EXIT_PARSE

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class InputValidationError(OrdalexError):
    """A class, system, triple or map failed validation."""

    exit_code = EXIT_INVALID


class UnsupportedConstructionError(OrdalexError):
    """A constructor restriction was hit (the input is out of this engine's range)."""

    exit_code = EXIT_UNSUPPORTED


class InternalInvariantError(OrdalexError):
    """A quantity that the theory guarantees failed to hold; indicates a bug."""

    exit_code = EXIT_INTERNAL
