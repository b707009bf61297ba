"""Exception types raised across the package."""


class MarkoffError(Exception):
    """Base class for all package errors."""


class NotInvertible(MarkoffError, ArithmeticError):
    pass


class NotCoprime(MarkoffError, ValueError):
    pass


class ZeroSlope(MarkoffError, ValueError):
    pass


class NotFareyPair(MarkoffError, ValueError):
    pass


class RootSlope(MarkoffError, ValueError):
    """Raised for operations undefined at the level-0 slopes 0/1 and 1/0."""


class ZeroDenominator(MarkoffError, ZeroDivisionError):
    pass


class DiscriminantMismatch(MarkoffError, AssertionError):
    """A constructed form does not have discriminant 9m^2 - 4."""


class CertificateViolation(MarkoffError, AssertionError):
    """A unicity certificate failed; this indicates a bug, not a theorem failure."""
