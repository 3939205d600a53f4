"""Exception types shared across the package."""


class GeomHarmError(Exception):
    """Base class for all library errors."""


class NonzeroRemainder(GeomHarmError, ArithmeticError):
    """Polynomial division that was expected to be exact left a remainder."""


class DivisionByZeroPoly(GeomHarmError, ZeroDivisionError):
    pass


class NonvanishingAtZero(GeomHarmError, ValueError):
    """Integrand is not integrable against a weight with a pole at 0."""


class NonvanishingAtOne(GeomHarmError, ValueError):
    """Integrand is not integrable against a weight with a pole at 1."""


class ParityError(GeomHarmError, ValueError):
    """Identity is only established for one parity of its index sum."""


class DomainError(GeomHarmError, ValueError):
    """Series evaluated outside its region of convergence."""


class LogResidueError(GeomHarmError, ArithmeticError):
    """The ln(1-x) parts of a finite-sum evaluation failed to cancel."""
