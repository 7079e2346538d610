"""Exception hierarchy shared across the package."""


class SkewPBWError(Exception):
    """Base class for all structural errors raised by this package."""


class RingMismatchError(SkewPBWError):
    """Operands live over different coefficient rings."""


class PresentationError(SkewPBWError):
    """Invalid or inconsistent presentation data."""


class PresentationMismatchError(SkewPBWError):
    """Operands belong to different presentations."""


class NotBijectiveError(SkewPBWError):
    """An operation required verified inverses / invertible constants."""


class UnsupportedOperationError(SkewPBWError):
    """The presentation does not support the requested operation."""


class ParseError(SkewPBWError):
    """Syntax error in a presentation file or expression."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(message + loc)
