"""Error types.  Every error carries a stable machine-readable ``code``
(its class name), which the CLI prints on standard error."""


class LogarrError(Exception):
    @property
    def code(self) -> str:
        return type(self).__name__


# -- exact field ------------------------------------------------------------

class NonMonic(LogarrError):
    pass


class Reducible(LogarrError):
    pass


class UnsupportedDegree(LogarrError):
    pass


class DivisionByZero(LogarrError, ZeroDivisionError):
    pass


class FieldMismatch(LogarrError):
    pass


# -- arrangement input ------------------------------------------------------

class DuplicateLine(LogarrError):
    pass


class ZeroVector(LogarrError):
    pass


class BadScalar(LogarrError):
    pass


class BadField(LogarrError):
    pass


class UnknownName(LogarrError):
    pass


class BadParams(LogarrError):
    pass


# -- geometry / criteria ----------------------------------------------------

class PointInZ(LogarrError):
    pass


class TrisecantThroughY(LogarrError):
    pass


class SamplingExhausted(LogarrError):
    pass


class PointNotInLattice(LogarrError):
    pass


class FieldNotReal(LogarrError):
    pass


class IndexOutOfRange(LogarrError, IndexError):
    pass


# -- internal consistency (these signal bugs, not bad input) ----------------

class InternalBoundExceeded(LogarrError):
    pass


class CriterionOracleMismatch(LogarrError):
    pass
