"""Exception types raised by the engine."""


class SubshiftError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(SubshiftError, ValueError):
    """A subshift description or literal could not be parsed or is invalid."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class EmptyLanguageError(SubshiftError):
    """The subshift has no points."""


class NotInLanguageError(SubshiftError):
    """A point was expected to lie in the subshift but does not."""


class UndefinedOnZeroError(SubshiftError):
    """The operation is not defined on the zero element."""


class IndexOrderError(SubshiftError):
    """A bonding map was requested between incomparable or reversed indices."""


class IndexTooCoarseError(SubshiftError):
    """The level index does not dominate the index required by a set."""


class RectangleTooSmallError(SubshiftError):
    """A tower's index rectangle cannot decide some universe member."""


class SampleMismatchError(SubshiftError):
    """Two concrete maps were built over different point samples."""
