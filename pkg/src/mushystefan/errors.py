"""Exception types raised across the package."""


class MushyStefanError(Exception):
    """Base class for every domain error raised by this package."""


class ValidationError(MushyStefanError, ValueError):
    """An input violates a sign or range constraint.

    ``invariant`` names the first violated constraint (e.g. ``"epsilon"``).
    """

    def __init__(self, invariant, message):
        super().__init__(message)
        self.invariant = invariant


class NoSignChange(MushyStefanError, ArithmeticError):
    """Bracket expansion never straddled a root."""


class NoRoot(MushyStefanError, ArithmeticError):
    """A transcendental equation has no root the solver could bracket."""


class Subcritical(MushyStefanError, ValueError):
    """The boundary coefficient does not exceed its existence threshold.

    Carries the supplied coefficient and the threshold it failed to exceed.
    """

    def __init__(self, name, value, threshold):
        super().__init__(
            f"{name}={float(value)!r} does not exceed the threshold {name}*={float(threshold)!r}; "
            "no solution with a mushy region exists"
        )
        self.name = name
        self.value = value
        self.threshold = threshold


class XiOverflow(MushyStefanError, OverflowError):
    """The front coefficient exceeds the cap where exp(xi**2) is unsafe."""


class OutOfDomain(MushyStefanError, ValueError):
    """Temperature requested outside the solid region or at t <= 0."""


class KindMismatch(MushyStefanError, TypeError):
    """Boundary condition variant incompatible with the solution kind."""


class DegenerateBound(MushyStefanError, ValueError):
    """The two-temperature bound needs d_inf > d0."""
