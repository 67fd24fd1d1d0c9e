"""Exception hierarchy shared by every module of the package."""


class PolytopeError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(PolytopeError, ValueError):
    pass


class DimensionMismatch(PolytopeError, ValueError):
    pass


class SingularMatrix(PolytopeError, ValueError):
    pass


class NotFullDimensional(PolytopeError, ValueError):
    pass


class Unbounded(PolytopeError, ValueError):
    pass


class Empty(PolytopeError, ValueError):
    pass


class IndexOutOfRange(PolytopeError, IndexError):
    pass


class NotAVertex(PolytopeError, ValueError):
    pass


class NotAVertexOfFacet(NotAVertex):
    pass


class NotIntegral(PolytopeError, ValueError):
    pass


class NotDelzant(PolytopeError, ValueError):
    pass


class NotReflexiveDelzant(PolytopeError, ValueError):
    pass


class NotAdmissible(PolytopeError, ValueError):
    pass


class UnsupportedDimension(PolytopeError, ValueError):
    pass


class OutOfDomain(PolytopeError, ValueError):
    pass


class InvalidFace(PolytopeError, ValueError):
    pass


class EpsilonTooLarge(PolytopeError, ValueError):
    pass


class AssertionViolation(PolytopeError, AssertionError):
    """A guaranteed mathematical property failed to hold.

    Raised instead of a bare ``assert`` so the check survives ``python -O``.
    Seeing one means the input violated a precondition that could not be
    detected up front (for instance, a polytope that is not reflexive Delzant).
    """


class FormatError(PolytopeError, ValueError):
    """A document could not be parsed; ``field`` names the offending entry."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
