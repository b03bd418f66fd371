"""Exception hierarchy shared by every engine and by the command line."""


class BettiError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BettiError, ValueError):
    """Malformed monomial, ideal file or graph file."""


class ZeroIdealError(BettiError, ValueError):
    """An operation that needs I != 0 received the zero ideal."""


class UnitIdealError(BettiError, ValueError):
    """An operation that needs 1 not in G(I) received the unit ideal."""


class ResourceCapError(BettiError):
    """A hard size cap (ground set width, Taylor generator count) was exceeded."""


class IncompleteTableError(BettiError, ValueError):
    """A Betti table lacks entries that a caller needs decided."""
