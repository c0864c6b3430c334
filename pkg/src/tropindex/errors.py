"""Exception types raised by tropindex."""


class TropIndexError(ValueError):
    """Base class for every error raised by this package."""


class ZeroPolynomial(TropIndexError):
    pass


class SequenceTooShort(TropIndexError):
    pass


class LengthMismatch(TropIndexError):
    pass


class InvalidIndex(TropIndexError):
    pass


class IndexOutOfRange(TropIndexError):
    pass


class NotAnIndex(TropIndexError):
    """A witness was requested for an index that does not satisfy the inequality."""


class ZeroCoefficient(TropIndexError):
    pass


class DegreeTooLarge(TropIndexError):
    pass


class NonPositiveEntry(TropIndexError):
    pass


class NotLogConcave(TropIndexError):
    pass


class IsLogConcave(TropIndexError):
    """A counterexample was requested for a log-concave sequence."""


class ParseError(TropIndexError):
    pass
