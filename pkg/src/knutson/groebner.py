"""Buchberger's algorithm, reduced Groebner bases and ideal comparisons.

Internally polynomials are ``{monomial: coefficient}`` dicts holding ints
mod p or Fractions, and every basis element is kept monic.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Optional

from .errors import AmbientMismatch
from .monomial import MonomialIdeal
from .orders import TermOrder
from .polynomial import (
    Polynomial,
    PolyRing,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

# -- internal dict arithmetic ------------------------------------------------


def _lead(d: dict, key):
    return max(d, key=key)


def _monic(d: dict, key, p: int) -> dict:
    if not d:
        return d
    lc = d[_lead(d, key)]
    if lc == 1:
        return d
    if p:
        inv = pow(lc, -1, p)
        return {m: c * inv % p for m, c in d.items()}
    return {m: c / lc for m, c in d.items()}


def _to_work(f: Polynomial, key, p: int) -> dict:
    if p:
        d = {m: int(c) % p for m, c in f.terms}
        d = {m: c for m, c in d.items() if c}
    else:
        d = {m: Fraction(c) for m, c in f.terms}
    return _monic(d, key, p)


def _reduce(f: dict, basis: list, key, p: int) -> dict:
    """Monic remainder of ``f`` modulo the monic ``basis``.

    Always rewrites the largest reducible term using the first eligible
    divisor in list order.
    """
    f = dict(f)
    r: dict = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, _, g in basis:
            if all(x <= y for x, y in zip(lm, m)):
                q = tuple(y - x for x, y in zip(lm, m))
                for gm, gc in g.items():
                    k = tuple(a + b for a, b in zip(gm, q))
                    v = f.get(k, 0) - c * gc
                    if p:
                        v %= p
                    if v:
                        f[k] = v
                    else:
                        f.pop(k, None)
                break
        else:
            r[m] = c
            del f[m]
    return _monic(r, key, p)


def _spoly(a, b, p: int) -> dict:
    lma, _, fa = a
    lmb, _, fb = b
    l = mono_lcm(lma, lmb)
    qa, qb = mono_div(l, lma), mono_div(l, lmb)
    out = {mono_mul(m, qa): c for m, c in fa.items()}
    for m, c in fb.items():
        k = mono_mul(m, qb)
        v = out.get(k, 0) - c
        if p:
            v %= p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _update(G: list, B: list, h: int, items: list):
    """Gebauer-Moeller installation of the new basis element ``h``."""
    hl = items[h][0]
    C = list(G)
    D: list = []
    while C:
        g = C.pop(0)
        gl = items[g][0]
        lg = mono_lcm(hl, gl)
        if mono_coprime(hl, gl) or not any(
            mono_divides(mono_lcm(hl, items[g2][0]), lg) for g2 in C + D
        ):
            D.append(g)
    E = [g for g in D if not mono_coprime(hl, items[g][0])]
    B_new = []
    for g1, g2 in B:
        l12 = mono_lcm(items[g1][0], items[g2][0])
        if not (
            mono_divides(hl, l12)
            and mono_lcm(items[g1][0], hl) != l12
            and mono_lcm(hl, items[g2][0]) != l12
        ):
            B_new.append((g1, g2))
    B_new.extend((g, h) for g in E)
    G_new = [g for g in G if not mono_divides(hl, items[g][0])]
    G_new.append(h)
    return G_new, B_new


def _groebner_dicts(polys: list, key, p: int, stats: Optional[dict] = None,
                    strategy: str = "auto") -> list:
    """Reduced Groebner basis of the given work dicts (monic, unsorted).

    ``strategy`` picks the next S-pair: ``"normal"`` takes the smallest
    lcm in the term order, ``"sugar"`` the smallest sugar degree with ties
    broken the same way.  ``"auto"`` uses sugar exactly when every input
    is homogeneous.  Every new element is fully reduced.
    """
    if strategy not in ("auto", "normal", "sugar"):
        raise ValueError(f"unknown pair strategy {strategy!r}")
    ordered = sorted((d for d in polys if d), key=lambda d: key(_lead(d, key)))
    if strategy == "auto":
        graded = all(len({sum(m) for m in d}) == 1 for d in ordered)
        strategy = "sugar" if graded else "normal"
    items: list = []
    sugar: list = []
    G: list = []
    B: list = []
    stats = stats if stats is not None else {}
    stats.setdefault("pairs_reduced", 0)

    def pair_sugar(i, j):
        a, b = items[i][0], items[j][0]
        l = sum(mono_lcm(a, b))
        return max(sugar[i] + l - sum(a), sugar[j] + l - sum(b))

    def pair_key(pair):
        l = mono_lcm(items[pair[0]][0], items[pair[1]][0])
        return (pair_sugar(*pair) if strategy == "sugar" else 0, key(l), pair)

    def reducers():
        # smallest leading monomial first
        return sorted((items[g] for g in G), key=lambda e: key(e[0]))

    def install(h, deg):
        nonlocal G, B
        items.append(_entry(h, key))
        sugar.append(deg)
        G, B = _update(G, B, len(items) - 1, items)

    for d in ordered:
        h = _reduce(d, reducers(), key, p)
        if h:
            install(h, max(map(sum, d)))
    while B:
        i, j = B.pop(min(range(len(B)), key=lambda k: pair_key(B[k])))
        s = _spoly(items[i], items[j], p)
        stats["pairs_reduced"] += 1
        if not s:
            continue
        h = _reduce(s, reducers(), key, p)
        if h:
            install(h, pair_sugar(i, j))
    minimal = [items[g] for g in G]
    out = []
    for k, entry in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        out.append(_reduce(entry[2], others, key, p))
    return out


def _from_work(d: dict, ring: PolyRing) -> Polynomial:
    return Polynomial.from_dict(ring, dict(d))


# -- public types ------------------------------------------------------------

_observers: list = []


@contextmanager
def watch_bases(callback):
    """Call ``callback(gb)`` on every ReducedGB constructed inside the block."""
    _observers.append(callback)
    try:
        yield
    finally:
        _observers.remove(callback)


@dataclass(frozen=True)
class ReducedGB:
    """The unique reduced Groebner basis of an ideal for one term order.

    ``basis`` is monic and sorted by increasing leading monomial.
    """

    basis: tuple
    order: TermOrder
    ring: PolyRing

    def __post_init__(self):
        for cb in _observers:
            cb(self)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self) -> list:
        return [g.terms[0][0] for g in self.basis]

    def key(self) -> tuple:
        return tuple(g.terms for g in self.basis)

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring.nvars, self.leading_monomials())

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero(self) -> bool:
        return not self.basis

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, list(self.basis), self.order)

    @cached_property
    def _work(self) -> list:
        p = self.ring.field.characteristic
        key = self.order.key
        return [_entry(_to_work(g, key, p), key) for g in self.basis]

    def reduces_to_zero(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        p = self.ring.field.characteristic
        key = self.order.key
        return not _reduce(_to_work(f.in_ring(self.ring), key, p), self._work, key, p)

    def format(self) -> list:
        return [str(g) for g in self.basis]


def _entry(d, key):
    lm = _lead(d, key)
    return (lm, d[lm], d)


def compute_reduced_gb(generators: Iterable[Polynomial], ring: PolyRing,
                       stats: Optional[dict] = None, strategy: str = "auto") -> ReducedGB:
    key = ring.order.key
    p = ring.field.characteristic
    work = [_to_work(g.in_ring(ring), key, p) for g in generators if not g.is_zero()]
    out = _groebner_dicts(work, key, p, stats, strategy)
    basis = sorted((_from_work(d, ring) for d in out), key=lambda g: key(g.terms[0][0]))
    return ReducedGB(tuple(basis), ring.order, ring)


class Ideal:
    """Ideal given by generators, with reduced Groebner bases cached per order."""

    def __init__(self, generators: Iterable[Polynomial] = (), ring: Optional[PolyRing] = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ValueError("an ideal without generators needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if not g.ring.same_ambient(ring):
                raise AmbientMismatch(f"generator {g} is not in {ring}")
        self.ring = ring
        self.generators = tuple(g.in_ring(ring) for g in gens if not g.is_zero())
        self._gb: dict = {}

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        I = cls([ring.one()], ring)
        I._gb[ring.order] = ReducedGB((ring.one(),), ring.order, ring)
        return I

    def groebner(self, order: Optional[TermOrder] = None) -> ReducedGB:
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = compute_reduced_gb(self.generators, self.ring.with_order(order))
            # first computation wins
            gb = self._gb.setdefault(order, gb)
        return gb

    def _install_gb(self, gb: ReducedGB):
        self._gb.setdefault(gb.order, gb)

    def key(self, order: Optional[TermOrder] = None) -> tuple:
        return self.groebner(order).key()

    def initial_ideal(self, order: Optional[TermOrder] = None) -> MonomialIdeal:
        return self.groebner(order).initial_ideal()

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial, order: Optional[TermOrder] = None) -> bool:
        if not f.ring.same_ambient(self.ring):
            raise AmbientMismatch(f"{f} is not in {self.ring}")
        return self.groebner(order).reduces_to_zero(f)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal", order: Optional[TermOrder] = None) -> bool:
        if not other.ring.same_ambient(self.ring):
            raise AmbientMismatch("ideals live in different rings")
        gb = self.groebner(order)
        if gb.is_unit():
            return True
        return all(gb.reduces_to_zero(g) for g in other.generators)

    def format(self, order: Optional[TermOrder] = None) -> list:
        return self.groebner(order).format()

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


# -- module level API ---------------------------------------------------------


def s_polynomial(f: Polynomial, g: Polynomial, order: Optional[TermOrder] = None) -> Polynomial:
    order = order or f.ring.order
    ring = f.ring.with_order(order)
    f, g = f.in_ring(ring), g.in_ring(ring)
    (cf, mf), (cg, mg) = f.leading_term(), g.leading_term()
    l = mono_lcm(mf, mg)
    field = ring.field
    return f.mul_monomial(mono_div(l, mf), field.inv(cf)) - g.mul_monomial(
        mono_div(l, mg), field.inv(cg))


def normal_form(f: Polynomial, G: list, order: Optional[TermOrder] = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` using exact field arithmetic."""
    order = order or f.ring.order
    ring = f.ring.with_order(order)
    field = ring.field
    divisors = [g.in_ring(ring) for g in G if not g.is_zero()]
    leads = [g.leading_term() for g in divisors]
    work = dict(f.in_ring(ring).terms)
    rem: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        for g, (lc, lm) in zip(divisors, leads):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = field.div(c, lc)
                for gm, gc in g.terms:
                    k = mono_mul(gm, q)
                    v = field.sub(work.get(k, field.zero), field.mul(factor, gc))
                    if v == 0:
                        work.pop(k, None)
                    else:
                        work[k] = v
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial.from_dict(ring, rem)


def buchberger(I: Ideal, order: Optional[TermOrder] = None) -> ReducedGB:
    return I.groebner(order)


def initial_ideal(I: Ideal, order: Optional[TermOrder] = None) -> MonomialIdeal:
    return I.initial_ideal(order)


def _same_ambient(I: Ideal, J: Ideal):
    if not I.ring.same_ambient(J.ring):
        raise AmbientMismatch("ideals live in different rings")


def ideal_member(f: Polynomial, I: Ideal, order: Optional[TermOrder] = None) -> bool:
    return I.contains(f, order)


def ideal_equal(I: Ideal, J: Ideal, order: Optional[TermOrder] = None) -> bool:
    _same_ambient(I, J)
    order = order or I.ring.order
    return I.key(order) == J.key(order)


def ideal_contains(I: Ideal, J: Ideal, order: Optional[TermOrder] = None) -> bool:
    """True iff J is a subset of I."""
    return I.contains_ideal(J, order)


def is_groebner(polys: list, order: TermOrder) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [g for g in polys if not g.is_zero()]
    if not polys:
        return True
    ring = polys[0].ring.with_order(order)
    key = order.key
    p = ring.field.characteristic
    items = [_entry(_to_work(g.in_ring(ring), key, p), key) for g in polys]
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if mono_coprime(items[i][0], items[j][0]):
                continue
            s = _spoly(items[i], items[j], p)
            if s and _reduce(s, items, key, p):
                return False
    return True


def is_reduced_groebner(gb: ReducedGB) -> bool:
    """Independent recheck of every reduced-basis invariant."""
    basis = list(gb.basis)
    if not is_groebner(basis, gb.order):
        return False
    leads = [g.terms[0][0] for g in basis]
    for i, g in enumerate(basis):
        if g.terms[0][1] != 1:
            return False
        for m, _ in g.terms:
            if any(mono_divides(l, m) for k, l in enumerate(leads) if k != i):
                return False
    key = gb.order.key
    return leads == sorted(leads, key=key)


def is_union_groebner(I: Ideal, J: Ideal, order: Optional[TermOrder] = None) -> bool:
    """True iff the union of the reduced bases of I and J is a Groebner basis."""
    _same_ambient(I, J)
    order = order or I.ring.order
    return is_groebner(list(I.groebner(order)) + list(J.groebner(order)), order)
