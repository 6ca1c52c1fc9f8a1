"""Exception hierarchy shared by every module.

All errors derive from :class:`ArithError`, which is a ``ValueError`` so that
callers who only care about bad input can catch the builtin.
"""


class ArithError(ValueError):
    """Base class for input and precondition failures."""


class BadInput(ArithError):
    pass


class IndexOutOfRange(ArithError, IndexError):
    pass


class DimensionMismatch(ArithError):
    pass


class KernelDimension(ArithError):
    pass


class ParseError(ArithError):
    """Raised when an expression violates the polynomial grammar."""


class NotSquareFree(ArithError):
    pass


class UnknownVariable(ArithError):
    pass


class ZeroPolynomial(ArithError):
    pass


class NotDominated(ArithError):
    pass


class VariableUnused(ArithError):
    pass


class NegativeLeading(ArithError):
    pass


# the two-variable closed form reports the same condition under this name
BadLeadingCoefficient = NegativeLeading


class NotAStructure(ArithError):
    pass


class NotQuasiNonSingular(ArithError):
    pass


class LoopEdge(ArithError):
    pass


class BadSize(ArithError):
    pass


class BoxTooLarge(ArithError):
    """A brute-force region exceeds the configured point cap."""
