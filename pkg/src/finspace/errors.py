"""Exception hierarchy shared by every module of the package."""


class FiniteSpaceError(Exception):
    """Base class for all errors raised by finspace."""


class CycleError(FiniteSpaceError):
    """The declared relation is not antisymmetric, so it defines no T0 space."""


class UnknownElement(FiniteSpaceError, KeyError):
    pass


class EmptySpace(FiniteSpaceError):
    pass


class EmptyComplex(FiniteSpaceError):
    pass


class UnknownVertex(FiniteSpaceError, KeyError):
    pass


class WrongHeight(FiniteSpaceError):
    pass


class HeightTooLarge(WrongHeight):
    pass


class WrongDimension(FiniteSpaceError):
    pass


class Disconnected(FiniteSpaceError):
    pass


class NotReducible(FiniteSpaceError):
    """A qc-reduction was requested for a pair whose union is not contractible."""


class NotAPoint(FiniteSpaceError):
    """An a-reduction was requested at a point that is not an a-point."""


class InvalidTrace(FiniteSpaceError):
    pass


class PreconditionViolated(FiniteSpaceError):
    pass


class TheoremViolation(FiniteSpaceError):
    """A computation contradicted a proven statement; always indicates a bug."""


class ParseError(FiniteSpaceError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
