"""Exception hierarchy shared by every module of the package."""


class TildeError(Exception):
    """Base class for all errors raised by :mod:`multitilde`."""


class ArityError(TildeError, ValueError):
    """Operands or argument lists do not have compatible arities."""


class CompositionIndexError(TildeError, IndexError):
    """A composition slot lies outside ``1..arity``."""


class InputError(TildeError, ValueError):
    """Malformed external input (JSON documents, relations, leaf lists).

    ``field`` names the offending field so the CLI can report it.
    """

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class ParseError(TildeError, ValueError):
    """Expression text does not match the grammar."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class StarNotSupported(TildeError, ValueError):
    """A star node was found where only star-free expressions are allowed."""


class UnsupportedArity(TildeError, ValueError):
    """Requested arity is outside the range an enumeration routine supports."""
