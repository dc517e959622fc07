"""Exception hierarchy.

Every error raised on bad input derives from :class:`SWToriError`; the CLI
maps :class:`ParseError` subclasses to exit code 2 and everything else to 3.
"""


class SWToriError(Exception):
    pass


class ParseError(SWToriError, ValueError):
    pass


class MalformedInput(ParseError):
    pass


class DomainError(SWToriError, ValueError):
    pass


class LetterOutOfRange(DomainError):
    pass


class VariableMismatch(DomainError):
    pass


class UnmappedGenerator(DomainError):
    pass


class UnmappedVariable(DomainError):
    pass


class NonSquare(DomainError):
    pass


class NotDivisible(DomainError):
    pass


class DegenerateMatrix(DomainError):
    pass


class AsymmetricSupport(DomainError):
    pass


class ArityMismatch(DomainError):
    pass


class UnknownClass(DomainError):
    pass


class StrandMismatch(DomainError):
    pass


class PreconditionError(DomainError):
    pass
