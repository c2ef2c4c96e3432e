"""Monomial term orders.

Every order is reduced to a sort key: ``order.key(a) < order.key(b)`` iff
``a`` is smaller than ``b``.  Monomials are plain tuples of exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import AmbientMismatch, InvalidOrder

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class TermOrder:
    """A term order on monomials in ``nvars`` variables (``None`` = any).

    ``kind`` is one of ``lex``, ``grevlex``, ``matrix`` or ``elimination``.
    Elimination orders compare the first ``block`` exponents with ``first``
    and break ties on the remaining ones with ``second``.
    """

    kind: str
    nvars: Optional[int] = None
    rows: tuple = ()
    block: int = 0
    first: Optional["TermOrder"] = None
    second: Optional["TermOrder"] = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind == "matrix":
            _check_matrix(self.rows)
            object.__setattr__(self, "nvars", len(self.rows[0]))
        elif self.kind == "elimination":
            if self.block < 1 or self.first is None or self.second is None:
                raise InvalidOrder("elimination order needs a block size and two inner orders")
        elif self.kind not in ("lex", "grevlex"):
            raise InvalidOrder(f"unknown order kind {self.kind!r}")

    def key(self, m: tuple) -> tuple:
        if self.kind == "lex":
            return m
        k = self._cache.get(m)
        if k is None:
            k = self._key(m)
            self._cache[m] = k
        return k

    def _key(self, m):
        kind = self.kind
        if kind == "lex":
            return m
        if kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if kind == "matrix":
            if len(m) != len(self.rows[0]):
                raise AmbientMismatch("monomial length does not match the weight matrix")
            return tuple(sum(w * e for w, e in zip(row, m)) for row in self.rows)
        b = self.block
        return (self.first.key(m[:b]), self.second.key(m[b:]))

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != len(b):
            raise AmbientMismatch(f"monomials of length {len(a)} and {len(b)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def spec(self) -> str:
        if self.kind == "matrix":
            return "matrix:" + ";".join(",".join(map(str, r)) for r in self.rows)
        if self.kind == "elimination":
            return f"elim({self.block}|{self.first.spec()}|{self.second.spec()})"
        return self.kind

    def __str__(self):
        return self.spec()


def _check_matrix(rows):
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InvalidOrder("weight matrix must be a non-empty rectangle")
    n = len(rows[0])
    for j in range(n):
        col = [r[j] for r in rows]
        first = next((w for w in col if w != 0), 0)
        if first <= 0:
            raise InvalidOrder(f"column {j} has no positive leading weight; not a well-order")
    if _rank(rows) != n:
        raise InvalidOrder("weight matrix must have full column rank")


def _rank(rows) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(a[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def lex() -> TermOrder:
    return LEX


def grevlex() -> TermOrder:
    return GREVLEX


def matrix_order(rows) -> TermOrder:
    return TermOrder("matrix", rows=tuple(tuple(int(w) for w in r) for r in rows))


def elimination(block: int, inner: TermOrder, first: TermOrder = LEX) -> TermOrder:
    """Block order where the first ``block`` variables dominate the rest."""
    return TermOrder("elimination", block=block, first=first, second=inner)


def parse_order(text: str) -> TermOrder:
    """Parse ``lex``, ``grevlex`` or ``matrix:1,1,1;0,0,-1;...``."""
    text = text.strip()
    if text in ("lex", "grevlex"):
        return TermOrder(text)
    if text.startswith("matrix:"):
        body = text[len("matrix:"):]
        try:
            rows = [[int(w) for w in r.split(",")] for r in body.split(";") if r.strip()]
        except ValueError as exc:
            raise InvalidOrder(f"bad weight matrix {body!r}") from exc
        return matrix_order(rows)
    raise InvalidOrder(f"unknown order {text!r}")


def compare(a: tuple, b: tuple, order: TermOrder) -> int:
    return order.compare(a, b)
