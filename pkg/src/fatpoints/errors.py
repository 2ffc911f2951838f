"""Exception types shared across the package."""


class FatPointsError(Exception):
    """Base class for all errors raised by fatpoints."""


class InvalidArgument(FatPointsError, ValueError):
    """An argument is outside the domain of the operation."""


class PreconditionError(FatPointsError, ValueError):
    """A theorem was applied outside its hypotheses."""


class NoCertificate(FatPointsError):
    """The search range was exhausted without certifying a bound."""


class InternalError(FatPointsError, RuntimeError):
    """A soundness guard tripped; indicates a bug rather than bad input."""


class TooLarge(FatPointsError):
    """The oracle was asked for a problem above its size guard."""
