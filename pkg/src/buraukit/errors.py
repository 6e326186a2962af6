"""Exception types shared across the package."""


class BurauError(Exception):
    """Base class for every error raised by buraukit."""


class NotDivisible(BurauError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class ZeroBase(BurauError, ZeroDivisionError):
    """Raised when a polynomial with negative exponents is evaluated at 0."""


class TauMismatch(BurauError, ValueError):
    """Raised when cyclotomic integers of different orders are combined."""


class BraidParseError(BurauError, ValueError):
    """Base class for braid word parsing failures."""


class BadToken(BraidParseError):
    pass


class ZeroIndex(BraidParseError):
    pass


class IndexOutOfRange(BraidParseError):
    """A generator index (or block position) lies outside the braid group."""


class StrandMismatch(BurauError, ValueError):
    pass


class SizeMismatch(BurauError, ValueError):
    pass


class OddExponent(BurauError, ValueError):
    """The closed form for powers of zeta is only known for even exponents."""


class TauTooSmall(BurauError, ValueError):
    """The order prediction only covers roots of unity of order > 3."""
