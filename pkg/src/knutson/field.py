"""Exact coefficient fields: the rationals and prime fields F_p.

Polynomials store raw coefficient values (``Fraction`` over QQ, ``int`` in
``[0, p)`` over F_p); a field descriptor supplies the arithmetic on them.
:class:`PrimeFieldElement` is the user-facing boxed value for F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadPrime, DivisionByZero, NotPrime

Rational = Fraction

MAX_MODULUS = 1 << 62

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(bound: int) -> list[int]:
    return [q for q in range(2, bound + 1) if is_prime(q)]


class Field:
    """Arithmetic on raw coefficient values of one field."""

    kind: str
    characteristic: int

    def convert(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def to_json(self, a):
        return str(a)


@dataclass(frozen=True)
class RationalField(Field):
    kind = "rationals"
    characteristic = 0

    def convert(self, x):
        if isinstance(x, PrimeFieldElement):
            raise TypeError("cannot lift a prime-field element to the rationals")
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    kind = "prime_field"

    def __post_init__(self):
        if not 2 <= self.p < MAX_MODULUS or not is_prime(self.p):
            raise NotPrime(f"{self.p} is not a word-sized prime")

    @property
    def characteristic(self):
        return self.p

    def convert(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} used in F_{self.p}")
            return x.residue
        if isinstance(x, Fraction):
            return reduce_rational_mod_p(x, self.p).residue
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def to_json(self, a):
        return a

    def __str__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_characteristic(char: int) -> Field:
    return QQ if char == 0 else PrimeField(char)


@dataclass(frozen=True)
class PrimeFieldElement:
    residue: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if not 0 <= self.residue < self.p:
            object.__setattr__(self, "residue", self.residue % self.p)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError("moduli differ")
            return other.residue
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((self.residue + b) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((self.residue - b) % self.p, self.p)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement((b - self.residue) % self.p, self.p)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return PrimeFieldElement(self.residue * b % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.residue % self.p, self.p)

    def inverse(self):
        if self.residue == 0:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return PrimeFieldElement(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * PrimeFieldElement(b, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.residue == other % self.p
        if isinstance(other, PrimeFieldElement):
            return (self.residue, self.p) == (other.residue, other.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __repr__(self):
        return f"{self.residue} (mod {self.p})"


def field_add(a, b):
    return a + b


def field_mul(a, b):
    return a * b


def field_neg(a):
    return -a


def field_inv(a):
    if isinstance(a, PrimeFieldElement):
        return a.inverse()
    a = Fraction(a)
    if a == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / a


def reduce_rational_mod_p(q, p: int) -> PrimeFieldElement:
    """Image of the rational ``q`` in F_p; raises BadPrime if p | denominator."""
    q = Fraction(q)
    den = q.denominator % p
    if den == 0:
        raise BadPrime(p)
    return PrimeFieldElement(q.numerator * pow(den, -1, p) % p, p)
