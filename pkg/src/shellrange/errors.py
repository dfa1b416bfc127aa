"""Exception types raised by the library."""


class ShellrangeError(Exception):
    """Base class for all library errors."""


class ParseError(ShellrangeError, ValueError):
    """A scalar or matrix literal could not be parsed."""


class DegenerateMobius(ShellrangeError, ValueError):
    """A Moebius map with ad - bc = 0."""


class SingularResolvent(ShellrangeError, ArithmeticError):
    """cA + dI is not invertible, i.e. -d/c is an eigenvalue of A."""


class SingularPivot(ShellrangeError, ArithmeticError):
    """The pivot entry used for a projection vanishes."""


class SingularRotation(ShellrangeError, ArithmeticError):
    """A rotated Cayley transform is undefined at the requested angle."""


class DegenerateFocalEquation(ShellrangeError, ArithmeticError):
    """The focal quadratic has a vanishing leading coefficient."""


class WrongSpectralClass(ShellrangeError, ValueError):
    """The requested identity is not certified for this spectral class."""


class UndefinedForRealScalar(ShellrangeError, ValueError):
    """Ratio invariants are undefined for real scalar matrices."""


class NotAConformalRangeQuadric(ShellrangeError, ValueError):
    """A 3x3 matrix is not the boundary quadric of any conformal range."""


class UnderdeterminedRealScalar(NotAConformalRangeQuadric):
    """The quadric carries no information beyond a real scalar matrix."""
