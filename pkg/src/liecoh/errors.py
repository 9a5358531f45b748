"""Exception types shared across the engine."""

from __future__ import annotations


class LieCohError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(LieCohError):
    """Operands live in spaces of different dimension."""


class IndexOutOfRange(LieCohError):
    """A basis index falls outside 0..dim-1 or is not strictly increasing."""


class DuplicatePair(LieCohError):
    """The same bracket pair (i, j) was supplied twice."""


class JacobiViolation(LieCohError):
    """Structure constants fail the Jacobi identity.

    Carries the offending basis triple and the residual coefficient vector
    of [[x,y],z] + [[y,z],x] + [[z,x],y] on that triple.
    """

    def __init__(self, triple, residual):
        self.triple = tuple(triple)
        self.residual = list(residual)
        pretty = ", ".join(str(c) for c in self.residual)
        super().__init__(
            f"Jacobi identity fails on basis triple {self.triple}: residual ({pretty})"
        )


class DegreeOutOfRange(LieCohError):
    """A form degree falls outside 0..dim."""


class DegreeZero(LieCohError):
    """The operation needs a form of degree at least one."""


class NotSymmetric(LieCohError):
    """The bilinear form matrix is not symmetric."""


class Degenerate(LieCohError):
    """The bilinear form matrix has determinant zero."""


class NotInvariant(LieCohError):
    """The bilinear form is not invariant under the bracket.

    Carries the first basis triple (i, j, k) where B([x,y],z) != B(x,[y,z]).
    """

    def __init__(self, triple, left, right):
        self.triple = tuple(triple)
        self.left = left
        self.right = right
        super().__init__(
            f"form is not invariant on basis triple {self.triple}: "
            f"B([x,y],z) = {left} but B(x,[y,z]) = {right}"
        )


class ZeroLambda(LieCohError):
    """A parameter list that must be nonzero contains a zero entry."""


class BadInput(LieCohError):
    """Command-line input could not be interpreted."""


class UnknownFamily(LieCohError):
    """The requested algebra family name is not recognised."""


class IOFailure(LieCohError):
    """A file could not be read or written."""
