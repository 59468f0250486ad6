"""Exception hierarchy shared by every qzero module."""


class QZeroError(Exception):
    """Base class for all qzero errors."""


class InvalidInput(QZeroError, ValueError):
    """Raised when an input violates a documented precondition."""


class DimensionMismatch(InvalidInput):
    pass


class NonSquareMatrix(InvalidInput):
    pass


class RankDeficient(InvalidInput):
    pass


class RankMismatch(InvalidInput):
    pass


class NotSublattice(InvalidInput):
    pass


class NotSquare(QZeroError, ValueError):
    """The integer (or rational) argument is not a perfect square."""


class ZeroVector(InvalidInput):
    pass


class NotHermitian(InvalidInput):
    pass


class AlgebraMismatch(InvalidInput):
    pass


class NotClosed(InvalidInput):
    pass


class MissingUnit(InvalidInput):
    pass


class Degenerate(InvalidInput):
    pass


class CoordinateNotInOrder(InvalidInput):
    pass


class DegenerateRestriction(QZeroError):
    """The trace form restricted to V_Z has a nonzero radical."""

    def __init__(self, message, radical=()):
        super().__init__(message)
        self.radical = list(radical)


class CapExceeded(QZeroError):
    """No isotropic vector was found within the enumeration cap."""


class NonRationalDeterminant(QZeroError, ArithmeticError):
    """A determinant over Q(sqrt(alpha)) came out irrational; indicates a bug."""


class InternalAssertion(QZeroError, AssertionError):
    pass
