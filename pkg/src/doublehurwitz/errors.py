"""Exception types raised across the package."""


class HurwitzError(Exception):
    """Base class for all package errors."""


class SizeMismatch(HurwitzError, ValueError):
    pass


class OnWall(HurwitzError, ValueError):
    """A point lies on a wall of the resonance arrangement."""

    def __init__(self, message, wall=None):
        super().__init__(message)
        self.wall = wall


class CutoffExceeded(HurwitzError):
    pass


class CutoffTooSmall(HurwitzError):
    pass


class ZeroArgument(HurwitzError, ZeroDivisionError):
    pass


class OddIndex(HurwitzError, ValueError):
    pass


class IncompatibleTruncation(HurwitzError, ValueError):
    pass


class InexactDivision(HurwitzError, ArithmeticError):
    pass


class SingularSystem(HurwitzError, ArithmeticError):
    pass


class InconsistentSystem(HurwitzError, ArithmeticError):
    pass


class ChamberMismatch(HurwitzError, ValueError):
    pass


class NotAdjacent(HurwitzError, ValueError):
    pass


class SubInputOnWall(OnWall):
    pass


class NonPositiveDelta(HurwitzError, ValueError):
    pass


class NotTotallyNegative(HurwitzError, ValueError):
    pass


class DegenerateDegree(HurwitzError, ValueError):
    """The polynomial degree bookkeeping is negative (only m = n = 1, g = 0)."""
