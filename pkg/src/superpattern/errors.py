"""Exception hierarchy shared by every module."""


class SuperpatternError(ValueError):
    """Base class for input and domain errors raised by this package."""


class CycleError(SuperpatternError):
    pass


class UnknownAtomError(SuperpatternError):
    pass


class OverlapError(SuperpatternError):
    pass


class MixedReferenceError(SuperpatternError):
    pass


class NotAnIntervalError(SuperpatternError):
    pass


class NotSubposetError(SuperpatternError):
    pass


class NotComparableError(SuperpatternError):
    pass


class SizeCapError(SuperpatternError):
    pass


class AtomMismatchError(SuperpatternError):
    pass


class NotAtomicError(SuperpatternError):
    pass


class NotNormalError(SuperpatternError):
    pass


class PoleError(SuperpatternError, ZeroDivisionError):
    pass


class DivideByZeroError(SuperpatternError, ZeroDivisionError):
    pass


class NotCoIdealError(SuperpatternError):
    pass


class NestingError(SuperpatternError):
    pass
