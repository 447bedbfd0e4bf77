"""Exception types shared across the package."""


class IntpowError(Exception):
    """Base class for every error raised by this package."""


class ParseError(IntpowError):
    """A text input could not be parsed.

    Carries the source name and the 1-based line number of the offending line.
    """

    def __init__(self, source, line, message):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


class InvalidVertexError(IntpowError):
    """A vertex id lies outside the graph's vertex range."""


class InvalidKError(IntpowError):
    """A power exponent lies outside the operation's valid range."""


class VertexSetMismatchError(IntpowError):
    """Two objects that must share a vertex set do not."""


class CoordinateOverflowError(IntpowError):
    """A coordinate left the signed 64-bit integer range."""


class NotProperError(IntpowError):
    """The representation is not proper.

    witness, when present, is a pair (u, v) such that the interval of u
    properly contains the interval of v.  Vertex ids are internal (0-based);
    the message renders them 1-based.
    """

    def __init__(self, witness=None):
        if witness is None:
            super().__init__("representation is not proper")
        else:
            u, v = witness
            super().__init__(
                f"representation is not proper: interval of vertex {u + 1} "
                f"properly contains interval of vertex {v + 1}"
            )
        self.witness = witness


class InfeasibleConstraintsError(IntpowError):
    """The difference-constraint system admits no solution."""


class RepresentationMismatchError(IntpowError):
    """A representation does not realize the required graph.

    pair, when present, is one offending vertex pair (internal ids).
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NonStrictOrderError(IntpowError):
    """An endpoint order that must be strict contains ties."""
