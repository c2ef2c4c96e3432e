"""Monomial ideals: minimal generators, intersections, colons, Hilbert series.

Hilbert numerators are integer coefficient lists in one variable ``z``
(index = power).  ``HS(S/M) = N(z) / (1 - z)^n``; cancelling ``(1 - z)``
as often as possible leaves the h-polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .polynomial import (
    format_monomial,
    is_squarefree_monomial,
    mono_divides,
    mono_lcm,
)


def minimalize(monos) -> tuple:
    """Antichain of divisibility-minimal elements, sorted canonically."""
    ms = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), m))
    out = []
    for m in ms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", minimalize(self.gens))
        if any(len(g) != self.nvars for g in self.gens):
            raise ValueError("generator length does not match nvars")

    @classmethod
    def unit(cls, n):
        return cls(n, ((0,) * n,))

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(is_squarefree_monomial(g) for g in self.gens)

    def contains(self, m: tuple) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return monomial_intersect(self, other)

    def quotient(self, m: tuple) -> "MonomialIdeal":
        """M : (m), generated by g / gcd(g, m)."""
        return MonomialIdeal(self.nvars, [tuple(max(a - b, 0) for a, b in zip(g, m))
                                          for g in self.gens])

    def format(self, names=None) -> list:
        names = names or tuple(f"x{i}" for i in range(1, self.nvars + 1))
        return [format_monomial(g, names) for g in self.gens]

    def __str__(self):
        return "(" + ", ".join(self.format()) + ")"


def squarefree_test(M: MonomialIdeal) -> bool:
    return M.is_squarefree()


def monomial_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(a.nvars, [mono_lcm(g, h) for g in a.gens for h in b.gens])


def monomial_colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if b.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for m in b.gens:
        q = a.quotient(m)
        result = q if result is None else monomial_intersect(result, q)
    return result


# -- Hilbert series -------------------------------------------------------


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _shift(a, k):
    return [0] * k + list(a) if a else []


def hilbert_numerator(M: MonomialIdeal) -> list:
    """K-polynomial of S/M by the pivot recursion on the last generator."""
    memo: dict = {}

    def rec(gens):
        if not gens:
            return [1]
        hit = memo.get(gens)
        if hit is not None:
            return hit
        *rest, last = gens
        rest = tuple(rest)
        colon = minimalize(tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest)
        out = _poly_sub(rec(rest), _shift(rec(colon), sum(last)))
        memo[gens] = out
        return out

    return rec(M.gens)


def divide_one_minus_z(p: list):
    """Return p / (1 - z) if exact, else None."""
    if sum(p) != 0:
        return None
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return q


@dataclass(frozen=True)
class HVector:
    entries: tuple
    nvars: int
    dim: Optional[int]

    def __post_init__(self):
        e = list(self.entries)
        while e and e[-1] == 0:
            e.pop()
        object.__setattr__(self, "entries", tuple(e))

    def multiplicity(self) -> int:
        return sum(self.entries)

    def is_palindromic(self) -> bool:
        return self.entries == self.entries[::-1]


@dataclass(frozen=True)
class HilbertSummary:
    """Hilbert data of S/M.  For the unit ideal ``dim`` and ``height`` are None
    (dimension -infinity) and the h-polynomial is zero."""

    h_vector: HVector
    dim: Optional[int]
    height: Optional[int]
    multiplicity: int
    numerator: tuple = field(default=(), compare=False)

    @property
    def h(self) -> tuple:
        return self.h_vector.entries

    def to_json(self) -> dict:
        return {
            "h_vector": list(self.h),
            "dim": self.dim if self.dim is not None else "-inf",
            "height": self.height if self.height is not None else "inf",
            "multiplicity": self.multiplicity,
        }


def hilbert_summary(M: MonomialIdeal, n: Optional[int] = None) -> HilbertSummary:
    n = M.nvars if n is None else n
    num = hilbert_numerator(M)
    if not num:
        return HilbertSummary(HVector((), n, None), None, None, 0, ())
    h, k = num, 0
    while True:
        q = divide_one_minus_z(h)
        if q is None:
            break
        h, k = q, k + 1
    d = n - k
    return HilbertSummary(HVector(tuple(h), n, d), d, k, sum(h), tuple(num))


# -- closed forms for Hankel determinantal rings ---------------------------


def theoretical_hankel_hvector(t: int, s: int) -> HVector:
    """h-vector of S/I_t(H) for a t x s generic Hankel matrix H."""
    if not 1 <= t <= s:
        raise ValueError(f"need 1 <= t <= s, got t={t}, s={s}")
    return HVector(tuple(comb(s - t + i, i) for i in range(t)), t + s - 1, 2 * t - 2)


def theoretical_hankel_multiplicity(t: int, s: int) -> int:
    return theoretical_hankel_hvector(t, s).multiplicity()


def theoretical_hankel_height(t: int, n: int) -> int:
    """Height of the ideal of t-minors of a Hankel matrix in n variables."""
    if t < 1 or n < 2 * t - 1:
        raise ValueError(f"no t-minors for t={t} with {n} variables")
    return n - 2 * t + 2


def sum_hvector_from_parts(h_I, case: str) -> tuple:
    """h-vector of S/(I+J) from the h-vector of one summand.

    ``case="P1P2"``: I, J are the t-minor ideals of the two maximal
    submatrices; the full partial sum sits alone in the middle.
    ``case="XQ"``: I is the t-minor ideal of X and J the (t-1)-minors of Q;
    the partial sum up to t-2 is repeated in the middle.
    """
    h = list(h_I.entries if isinstance(h_I, HVector) else h_I)
    t = len(h)
    partial = [sum(h[: i + 1]) for i in range(t)]
    if case == "P1P2":
        return tuple(partial + partial[-2::-1])
    if case == "XQ":
        head = partial[: t - 1]
        return tuple(head + head[::-1])
    raise ValueError(f"unknown case {case!r}")


# -- enumeration oracle -----------------------------------------------------


def squarefree_monomial_ideals(n: int) -> list:
    """All nonzero squarefree monomial ideals of K[x1..xn] by antichain enumeration."""
    subsets = [tuple((mask >> i) & 1 for i in range(n)) for mask in range(1 << n)]
    out = []
    for size in range(1, len(subsets) + 1):
        for chain in combinations(subsets, size):
            if all(not mono_divides(a, b) and not mono_divides(b, a)
                   for a, b in combinations(chain, 2)):
                out.append(MonomialIdeal(n, chain))
    return out
