"""Exception hierarchy for relthue."""


class RelThueError(Exception):
    """Base class for all errors raised by this package."""


class NonPositive(RelThueError, ValueError):
    pass


class NotSquareFree(RelThueError, ValueError):
    pass


class RingMismatch(RelThueError, ValueError):
    pass


class ReducibleParameter(RelThueError, ValueError):
    """The parameter t makes the binary form reducible over Q."""


class DualParameterReducible(ReducibleParameter):
    pass


class PrecisionExhausted(RelThueError, ArithmeticError):
    pass


class IndistinguishableRoots(RelThueError, ArithmeticError):
    pass


class UnresolvedCase(RelThueError):
    """A case rule needs an absolute Thue inequality that was neither cited nor searched."""


class DegenerateRay(RelThueError, ArithmeticError):
    pass
