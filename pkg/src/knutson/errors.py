"""Exception hierarchy shared by all modules."""


class KnutsonError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(KnutsonError, ZeroDivisionError):
    pass


class BadPrime(KnutsonError):
    """A prime divides a denominator, so the reduction is undefined."""

    def __init__(self, p, reason="prime divides a denominator"):
        super().__init__(f"bad prime {p}: {reason}")
        self.p = p
        self.reason = reason


class NotPrime(KnutsonError, ValueError):
    pass


class AmbientMismatch(KnutsonError, ValueError):
    pass


class ZeroPolynomial(KnutsonError, ValueError):
    pass


class InvalidOrder(KnutsonError, ValueError):
    pass


class ZeroIdeal(KnutsonError, ValueError):
    pass


class ZeroWitness(KnutsonError, ValueError):
    pass


class ExactDivisionError(KnutsonError, ArithmeticError):
    """An elimination-based colon produced a non-divisible element (internal bug)."""


class ZeroReduction(KnutsonError):
    """Every generator vanished after reduction mod p."""

    def __init__(self, p):
        super().__init__(f"all generators vanish modulo {p}")
        self.p = p


class ParseError(KnutsonError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SeedRejected(KnutsonError, ValueError):
    def __init__(self, monomial_text):
        super().__init__(f"leading monomial {monomial_text} is not squarefree")
        self.monomial = monomial_text


class SquarefreeViolation(KnutsonError):
    pass


class ClosureCapExceeded(KnutsonError):
    def __init__(self, message, family):
        super().__init__(message)
        self.family = family


class OrderNotDiagonal(KnutsonError):
    """The configured term order does not pick the main diagonal of a minor."""
