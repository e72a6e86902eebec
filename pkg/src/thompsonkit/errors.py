"""Exception types raised across the package."""


class ThompsonError(ValueError):
    """Base class for every error raised by thompsonkit."""


class InvalidWord(ThompsonError):
    pass


class NotPrefixFree(ThompsonError):
    pass


class IncompleteCode(ThompsonError):
    pass


class ArityMismatch(ThompsonError):
    pass


class NotInT(ThompsonError):
    pass


class NotInF(ThompsonError):
    pass


class CapExceeded(ThompsonError):
    """Exact enumeration would exceed the cylinder-length cap."""


class SourceTargetMismatch(ThompsonError):
    pass


class KindMismatch(ThompsonError):
    pass


class DyadicPointError(ThompsonError):
    """A dyadic point was given where a non-dyadic one is required."""
