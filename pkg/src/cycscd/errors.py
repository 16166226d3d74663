"""Exception types shared across the package."""


class CycScdError(Exception):
    """Base class for all errors raised by this package."""


# -- ranked poset validation -------------------------------------------------

class IdOutOfRange(CycScdError):
    """An element id, rank entry, or mapping value is outside the valid range."""


class DuplicateCover(CycScdError):
    """The same cover pair was supplied more than once."""


class CoverRankMismatch(CycScdError):
    """A cover pair (x, y) does not satisfy rank(y) = rank(x) + 1."""


class EmptyPoset(CycScdError):
    """Operation requires a nonempty poset."""


class EmptySubset(CycScdError):
    """Operation requires a nonempty element subset."""


class InvalidMorphism(CycScdError):
    """A cover morphism failed verification."""


class InvalidSourceScd(CycScdError):
    """A source decomposition failed verification."""


# -- cyclic words ------------------------------------------------------------

class EmptyWord(CycScdError):
    """Cyclic words must have at least one position."""


class SizeLimitExceeded(CycScdError):
    """A construction would exceed the configured element cap."""


class BaseMismatch(CycScdError):
    """A necklace does not belong to the fiber it was folded against."""


class PatternViolation(CycScdError):
    """A block does not project onto the required base pattern."""


# -- partition codecs --------------------------------------------------------

class ExcludedNecklace(CycScdError):
    """Constant necklaces are excluded from the codec domains."""


class AllOnes(CycScdError):
    """The all-ones partition word is excluded."""


class NotDivisible(CycScdError):
    """The block code of the input is not divisible by the requested modulus."""


class PeriodicAlpha(CycScdError):
    """Operation requires an aperiodic fiber index."""


class AperiodicAlpha(CycScdError):
    """Operation requires a periodic fiber index."""


# -- documents / internal guards ---------------------------------------------

class DocumentError(CycScdError):
    """A JSON document failed to parse or validate."""


class InternalCheckFailed(CycScdError):
    """A construction produced output that failed its own verification."""
