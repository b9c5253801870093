"""Exception types shared across the package."""


class QscError(Exception):
    pass


class DivisionByZero(QscError, ZeroDivisionError):
    pass


class NotDivisible(QscError, ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, message="not divisible", remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotUnivariate(QscError, ValueError):
    pass


class PoleHit(QscError, ZeroDivisionError):
    """A substitution sent a denominator factor to zero."""


class NotCoprime(QscError, ArithmeticError):
    """A denominator factor shares a divisor with the modulus after cancellation."""


class BadParity(QscError, ValueError):
    pass


class NotPrime(QscError, ValueError):
    pass


class UndefinedPochhammer(QscError, ValueError):
    pass
