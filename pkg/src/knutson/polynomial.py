"""Sparse multivariate polynomials over QQ or F_p.

A polynomial is an immutable tuple of ``(monomial, coefficient)`` pairs kept
in strictly decreasing order under its ring's term order, so two
polynomials are equal exactly when their term tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import AmbientMismatch, ZeroPolynomial
from .field import QQ, Field
from .orders import LEX, TermOrder, elimination

MAX_EXPONENT = (1 << 31) - 1


# -- monomials -----------------------------------------------------------


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


def is_squarefree_monomial(m: tuple) -> bool:
    return all(e <= 1 for e in m)


def format_monomial(m: tuple, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- rings ---------------------------------------------------------------


def default_names(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class PolyRing:
    """``field[names]`` with a term order fixing the term sort."""

    nvars: int
    field: Field = QQ
    order: TermOrder = LEX
    names: tuple = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(self.nvars))
        if len(self.names) != self.nvars:
            raise AmbientMismatch("need one name per variable")
        if self.order.nvars is not None and self.order.nvars != self.nvars:
            raise AmbientMismatch("order was built for a different number of variables")

    def same_ambient(self, other: "PolyRing") -> bool:
        return (self.nvars, self.field, self.names) == (other.nvars, other.field, other.names)

    def with_order(self, order: TermOrder) -> "PolyRing":
        if order == self.order:
            return self
        return PolyRing(self.nvars, self.field, order, self.names)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.nvars, field, self.order, self.names)

    def extended(self, position: int = 0, name: str = "t") -> "PolyRing":
        """Ring with one new variable inserted at ``position``.

        With ``position == 0`` the new variable gets an elimination order
        dominating the old variables, whose relative order is kept.
        """
        names = self.names[:position] + (name,) + self.names[position:]
        order = elimination(1, self.order) if position == 0 else self.order
        if position != 0 and self.order.kind == "matrix":
            raise AmbientMismatch("insert non-leading variables only under lex or grevlex")
        return PolyRing(self.nvars + 1, self.field, order, names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i: int) -> "Polynomial":
        """The i-th variable, 0-based."""
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m: tuple, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(m): c})

    def __call__(self, text: str) -> "Polynomial":
        from .text import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}] ({self.order})"


class LeadingTerm(NamedTuple):
    coefficient: object
    monomial: tuple


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms=None, *, _sorted: bool = False):
        self.ring = ring
        self._hash = None
        if _sorted:
            self.terms = terms
            return
        field = ring.field
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.nvars:
                raise AmbientMismatch(f"monomial {m} does not live in {ring.nvars} variables")
            if any(e < 0 or e > MAX_EXPONENT for e in m):
                raise OverflowError(f"exponent out of range in {m}")
            c = field.convert(c)
            if m in acc:
                acc[m] = field.add(acc[m], c)
            else:
                acc[m] = c
        key = ring.order.key
        self.terms = tuple(sorted(((m, c) for m, c in acc.items() if c != 0),
                                  key=lambda t: key(t[0]), reverse=True))

    @classmethod
    def from_dict(cls, ring, d: dict) -> "Polynomial":
        """Build from a dict already free of zero coefficients."""
        key = ring.order.key
        return cls(ring, tuple(sorted(d.items(), key=lambda t: key(t[0]), reverse=True)),
                   _sorted=True)

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def to_dict(self) -> dict:
        return dict(self.terms)

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def coefficients(self) -> list:
        return [c for _, c in self.terms]

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m, _ in self.terms)

    def leading_term(self, order: TermOrder | None = None) -> LeadingTerm:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return LeadingTerm(self.terms[0][1], self.terms[0][0])
        m, c = max(self.terms, key=lambda t: order.key(t[0]))
        return LeadingTerm(c, m)

    def leading_monomial(self, order: TermOrder | None = None) -> tuple:
        return self.leading_term(order).monomial

    def leading_coefficient(self, order: TermOrder | None = None):
        return self.leading_term(order).coefficient

    # -- arithmetic ------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(self.ring, {(0,) * self.ring.nvars: other})
        if other.ring != self.ring:
            raise AmbientMismatch(f"{other.ring} vs {self.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            v = f.add(acc[m], c) if m in acc else c
            if v == 0:
                acc.pop(m, None)
            else:
                acc[m] = v
        return Polynomial.from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, tuple((m, f.neg(c)) for m, c in self.terms), _sorted=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.ring.field
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                v = f.mul(c1, c2)
                acc[m] = f.add(acc[m], v) if m in acc else v
        return Polynomial.from_dict(self.ring, {m: c for m, c in acc.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, f.mul(c, a)) for m, a in self.terms), _sorted=True)

    def mul_monomial(self, mono: tuple, c=1) -> "Polynomial":
        f = self.ring.field
        c = f.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((mono_mul(m, mono), f.mul(c, a)) for m, a in self.terms),
                          _sorted=True)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    # -- rings -----------------------------------------------------------

    def in_ring(self, ring: PolyRing) -> "Polynomial":
        """Same polynomial re-sorted in a ring that differs only in its order."""
        if ring == self.ring:
            return self
        if not ring.same_ambient(self.ring):
            raise AmbientMismatch(f"{self.ring} vs {ring}")
        return Polynomial.from_dict(ring, dict(self.terms))

    def with_order(self, order: TermOrder) -> "Polynomial":
        return self.in_ring(self.ring.with_order(order))

    def extend_ring(self, position: int = 0, ring: PolyRing | None = None, name: str = "t"):
        """Embed into the ring with a new variable at ``position`` (exponent 0)."""
        if not 0 <= position <= self.ring.nvars:
            raise IndexError(f"bad insertion position {position}")
        ring = ring or self.ring.extended(position, name)
        d = {m[:position] + (0,) + m[position:]: c for m, c in self.terms}
        return Polynomial.from_dict(ring, d)

    def restrict(self, position: int, ring: PolyRing) -> "Polynomial":
        """Drop the variable at ``position``; the polynomial must not involve it."""
        d = {}
        for m, c in self.terms:
            if m[position]:
                raise ValueError("polynomial involves the variable being dropped")
            d[m[:position] + m[position + 1:]] = c
        return Polynomial.from_dict(ring, d)

    def map_coefficients(self, ring: PolyRing, fn) -> "Polynomial":
        """Apply ``fn`` to every coefficient and land in ``ring``."""
        return Polynomial(ring, [(m, fn(c)) for m, c in self.terms])

    def substitute_zero(self, indices: Iterable[int]) -> "Polynomial":
        idx = set(indices)
        return Polynomial.from_dict(
            self.ring, {m: c for m, c in self.terms if not any(m[i] for i in idx)})

    # -- equality / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == ((((0,) * self.ring.nvars), self.ring.field.convert(other)),)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self):
        from .text import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def leading_term(f: Polynomial, order: TermOrder | None = None) -> LeadingTerm:
    return f.leading_term(order)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def extend_ring(f: Polynomial, position: int = 0) -> Polynomial:
    return f.extend_ring(position)
