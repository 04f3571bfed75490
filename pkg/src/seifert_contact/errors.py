"""Exception hierarchy shared by every module of the package."""


class SeifertError(Exception):
    """Base class for all domain errors raised by this package."""


class ValidationError(SeifertError):
    pass


class NotCoprime(ValidationError):
    pass


class NotHomologySphere(ValidationError):
    pass


class BadZeroPattern(ValidationError):
    pass


class ZeroDenominator(SeifertError):
    """An operation needs every denominator a_i to be nonzero."""


class DegenerateHopf(SeifertError):
    """Fiber surface meets the Seifert fibers non-transversely (some I = 0)."""


class MixedSignsInternal(SeifertError):
    """Intersection numbers of a fibered multilink disagree in sign.

    This is never expected; it indicates an orientation-convention bug.
    """


class NotFiberedError(SeifertError):
    pass


class NotS3(SeifertError):
    pass


class NotApplicable(SeifertError):
    pass


class InternalConventionError(SeifertError):
    """A proved property failed on a concrete input."""


class MalformedCurve(SeifertError):
    pass


class ContactViolation(SeifertError):
    pass


class QuadrantMismatch(SeifertError):
    pass


class Infeasible(SeifertError):
    pass


class QZero(SeifertError):
    pass


class Degenerate(SeifertError):
    pass


class ParseError(SeifertError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
