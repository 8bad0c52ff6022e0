"""Exception types raised across the package."""


class DRGError(ValueError):
    """Base class for every error raised by drgresist."""


# intersection arrays

class IntersectionArrayError(DRGError):
    pass


class ArrayShapeError(IntersectionArrayError):
    """b empty or len(b) != len(c)."""


class ZeroEntry(IntersectionArrayError):
    pass


class FirstCNotOne(IntersectionArrayError):
    pass


class NonIntegralValency(IntersectionArrayError):
    pass


class NegativeIntersectionNumber(IntersectionArrayError):
    pass


# index / domain errors

class StratumOutOfRange(DRGError, IndexError):
    pass


class DegreeOutOfRange(DRGError, IndexError):
    pass


class ParamOutOfDomain(DRGError):
    pass


class ValidationFailed(DRGError):
    """A family generator produced an array that fails core validation."""


# numerics

class PoleEncountered(DRGError, ZeroDivisionError):
    pass


class EigenFailure(DRGError, ArithmeticError):
    pass


class SingularSystem(DRGError, ArithmeticError):
    pass


# explicit graphs

class TooLarge(DRGError):
    pass


class NotDistanceRegular(DRGError):
    pass


class InvalidGraph(DRGError):
    """Adjacency is not symmetric, has loops, is irregular or disconnected."""
