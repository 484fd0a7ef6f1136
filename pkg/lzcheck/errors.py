"""
Error types raised by the library and their command-line exit codes.
"""


class LzError(ValueError):
    """Base class for all library errors."""
    exit_code = 2


class NotPrime(LzError):
    """Characteristic is not a prime number."""


class Reducible(LzError):
    """Extension polynomial factors over the prime field."""


class ZeroInverse(LzError):
    """Attempt to invert zero."""


class PolynomialSyntaxError(LzError):
    """Input text does not follow the polynomial grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(LzError):
    """Identifier is not a variable of the ring."""


class ZeroPolynomial(LzError):
    """Operation is undefined on the zero polynomial."""


class OutOfRange(LzError):
    """Parameter outside of the admissible range."""


class WrongCharacteristic(LzError):
    """Equation is not the one prescribed in this characteristic."""


class DivisionUndefined(LzError):
    """Denominator vanishes on the hypersurface."""


class NotAtOrigin(LzError):
    """Hypersurface does not pass through the origin."""
    exit_code = 3


class ResourceLimit(LzError):
    """S-pair and reduction-step budget exhausted."""
    exit_code = 4
