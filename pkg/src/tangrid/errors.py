"""Exception hierarchy shared by every tangrid module."""


class TangridError(Exception):
    """Base class for all geometry failures raised by tangrid."""


class NonConvex(TangridError, ValueError):
    pass


class DegenerateVertex(TangridError, ValueError):
    pass


class DegenerateTriangle(TangridError, ValueError):
    pass


class NotTangential(TangridError, ValueError):
    pass


class ParallelLines(TangridError, ValueError):
    pass


class CoincidentPoints(TangridError, ValueError):
    pass


class SingularLocus(TangridError, ValueError):
    """Raised when a point is too close to the line PQ = 1 of the general map."""


class DomainError(TangridError, ValueError):
    """Parameters outside the admissible domain of a transform."""


class InfeasibleAngles(TangridError, ValueError):
    pass


class SlopeOrder(TangridError, ValueError):
    pass


class NoFeasibleLabeling(TangridError, RuntimeError):
    pass


class InvalidTiling(TangridError, ValueError):
    pass


class GapInfeasible(TangridError, ValueError):
    pass
