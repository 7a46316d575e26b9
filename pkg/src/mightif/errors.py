"""Shared exception types, kept together so the CLI can map them to exit codes."""


class MightifError(Exception):
    """Base class for all package errors."""


class ParseError(MightifError):
    """Syntax error in a formula, with position and the tokens that were legal there."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{line}:{column}: {message}"
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(detail)


class ModelFormatError(MightifError):
    """Malformed model file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ResourceLimitError(MightifError):
    """A configured size bound (atom budget, subset blowup) was exceeded."""


class SideConditionError(MightifError):
    """An axiom schema was instantiated with parts violating its side-conditions."""


class PathError(MightifError):
    """An occurrence path does not address a node of the formula."""
