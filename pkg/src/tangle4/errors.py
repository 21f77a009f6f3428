"""Exception types raised across the package."""


class TangleError(Exception):
    """Base class for all package errors."""


class InvalidSeparation(TangleError):
    pass


class NotAStar(TangleError):
    pass


class NotNested(TangleError):
    pass


class NotProper(TangleError):
    pass


class SeparatorSplit(TangleError):
    """A star separator is split by the separation being lifted."""


class DomainMismatch(TangleError):
    pass


class NotCubic(TangleError):
    pass


class WrongSize(TangleError):
    pass


class Inconsistent(TangleError):
    pass


class NotForced(TangleError):
    pass


class NotInternally4Connected(TangleError):
    pass


class NotApplicable(TangleError):
    pass


class NotThreeConnected(TangleError):
    pass


class ConstructionFailure(TangleError):
    pass


class NoDistinguisher(TangleError):
    pass


class TheoremViolation(TangleError):
    pass


class NoSuchTorso(TangleError):
    pass


class InvalidTangle(TangleError):
    pass


class NotQuasi4Connected(TangleError):
    pass


class UniversalityViolation(TangleError):
    pass


class PreconditionUnmet(TangleError):
    pass


class ParseError(TangleError):
    """Malformed graph input; ``where`` names the line or byte offset."""

    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{message} (at {where})")
        self.where = where
