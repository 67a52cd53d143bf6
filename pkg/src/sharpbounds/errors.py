"""Exception types shared across the package."""


class SharpboundsError(Exception):
    """Base class for all errors raised by this package."""


class Graph6Error(SharpboundsError):
    """A graph6 string could not be decoded.

    ``offset`` is the byte position inside the string where decoding failed.
    """

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class UnsupportedSizeError(SharpboundsError):
    """The graph is outside the supported encoding range (order > 62)."""


class UndefinedInvariantError(SharpboundsError):
    """The invariant is undefined on this graph (e.g. total domination with
    an isolated vertex). Table builders record the cell as missing."""


class ConfigError(SharpboundsError):
    """Invalid configuration: unknown column, empty corpus, bad option."""


class CorpusError(SharpboundsError):
    """A corpus file could not be read; the message names the offending line."""
