"""Reduction of rational ideals modulo primes.

A prime ``p`` is good for ``I`` when the initial ideal of the reduction
``I(p)`` equals the initial ideal of ``I`` read modulo p (the same
monomial ideal, since leading monomials carry no coefficients).  Bad
primes are found by computing both sides; nothing here predicts them
except the heuristic in ``suspect_primes``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Union

from .closure import KnutsonFamily, WitnessPolicy, closure
from .errors import BadPrime, NotPrime, ZeroReduction
from .field import QQ, GF, is_prime, reduce_rational_mod_p
from .groebner import Ideal
from .monomial import MonomialIdeal
from .orders import TermOrder
from .polynomial import Polynomial, PolyRing


@dataclass(frozen=True)
class IntegralForm:
    """Primitive integer generators of a rational ideal.

    ``scales[i]`` is the rational factor that turned generator i of the
    input into ``generators[i]``.
    """

    ring: PolyRing
    generators: tuple
    scales: tuple = ()

    def ideal(self) -> Ideal:
        return Ideal(list(self.generators), self.ring)


def _require_rational(ring: PolyRing):
    if ring.field is not QQ:
        raise ValueError(f"expected rational coefficients, got {ring.field}")


def integral_scale(f: Polynomial, primitive: bool = True) -> Fraction:
    """Factor clearing the denominators of f (and its content if ``primitive``)."""
    coeffs = [Fraction(c) for _, c in f.terms]
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    if not primitive or not coeffs:
        return Fraction(den)
    content = 0
    for c in coeffs:
        content = gcd(content, (c * den).numerator)
    return Fraction(den, content)


def integral_form(I: Ideal) -> IntegralForm:
    _require_rational(I.ring)
    gens, scales = [], []
    for g in I.generators:
        s = integral_scale(g)
        gens.append(g.scale(s))
        scales.append(s)
    return IntegralForm(I.ring, tuple(gens), tuple(scales))


def reduce_polynomial(f: Polynomial, ring_p: PolyRing) -> Polynomial:
    """Coefficientwise image of f in ``ring_p``; BadPrime if p divides a denominator."""
    p = ring_p.field.p
    return f.map_coefficients(ring_p, lambda c: reduce_rational_mod_p(c, p).residue)


def reduced_ring(ring: PolyRing, p: int) -> PolyRing:
    return ring.with_field(GF(p))


def reduce_ideal(F: Union[IntegralForm, Ideal], p: int) -> Ideal:
    """I(p).  Given a plain Ideal, denominators are cleared but contents are
    kept, so e.g. (3*x1) vanishes at p = 3."""
    if isinstance(F, Ideal):
        _require_rational(F.ring)
        F = IntegralForm(F.ring, tuple(g.scale(integral_scale(g, primitive=False))
                                       for g in F.generators))
    ring_p = reduced_ring(F.ring, p)
    images = [reduce_polynomial(g, ring_p) for g in F.generators]
    kept = [g for g in images if not g.is_zero()]
    if not kept:
        raise ZeroReduction(p)
    return Ideal(kept, ring_p)


@dataclass(frozen=True)
class ReductionReport:
    p: int
    status: str  # "good" | "bad"
    reason: str = ""
    lt_of_reduction: Optional[MonomialIdeal] = None
    reduction_of_lt: Optional[MonomialIdeal] = None
    match: bool = False

    def to_json(self, names=None) -> dict:
        fmt = (lambda M: M.format(names) if M is not None else None)
        return {"p": self.p, "status": self.status, "reason": self.reason,
                "lt_of_reduction": fmt(self.lt_of_reduction),
                "reduction_of_lt": fmt(self.reduction_of_lt), "match": self.match}


def compare_initials(I: Ideal, p: int, order: Optional[TermOrder] = None,
                     _lt_q: Optional[MonomialIdeal] = None) -> ReductionReport:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    _require_rational(I.ring)
    order = order or I.ring.order
    lt_q = _lt_q if _lt_q is not None else I.initial_ideal(order)
    try:
        Ip = reduce_ideal(integral_form(I), p)
    except ZeroReduction:
        return ReductionReport(p, "bad", "all generators vanish", None, lt_q, False)
    except BadPrime as exc:
        return ReductionReport(p, "bad", str(exc), None, lt_q, False)
    lt_p = Ip.initial_ideal(order)
    match = lt_p == lt_q
    return ReductionReport(p, "good" if match else "bad",
                           "" if match else "initial ideals differ", lt_p, lt_q, match)


def prime_scan(I: Ideal, primes, order: Optional[TermOrder] = None) -> list:
    primes = sorted(set(primes))
    for p in primes:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
    if not primes:
        return []
    lt_q = I.initial_ideal(order or I.ring.order)
    return [compare_initials(I, p, order, _lt_q=lt_q) for p in primes]


def scan_summary(reports: list) -> dict:
    """Mismatching primes, and whether every scanned prime above the
    largest mismatch matches (trivially true inside the scan)."""
    bad = [r.p for r in reports if not r.match]
    top = max(bad) if bad else None
    above = [r for r in reports if top is None or r.p > top]
    return {"scanned": [r.p for r in reports], "bad_primes": bad,
            "all_match_above_largest_bad": all(r.match for r in above)}


def _prime_factors(n: int, bound: int = 10**6) -> set:
    n = abs(n)
    out, d = set(), 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def suspect_primes(I: Ideal, order: Optional[TermOrder] = None) -> list:
    """Heuristic: primes dividing a denominator of the monic reduced basis
    over the rationals, or a leading coefficient of the integral generators."""
    _require_rational(I.ring)
    out: set = set()
    for g in I.groebner(order).basis:
        for _, c in g.terms:
            out |= _prime_factors(Fraction(c).denominator)
    for g in integral_form(I).generators:
        out |= _prime_factors(int(g.leading_coefficient(order)))
    return sorted(p for p in out if is_prime(p))


def knutson_family_mod_p(f: Polynomial, p: int, policy: Optional[WitnessPolicy] = None,
                         order: Optional[TermOrder] = None) -> KnutsonFamily:
    """Closure of (f(p)) over F_p, with rational witnesses reduced as well."""
    _require_rational(f.ring)
    policy = policy or WitnessPolicy()
    ring_p = reduced_ring(f.ring, p)
    fp = reduce_polynomial(f.scale(integral_scale(f)), ring_p)
    if fp.is_zero():
        raise ZeroReduction(p)
    extra = []
    for c in policy.extra:
        if c.ring.field is QQ:
            c = reduce_polynomial(c.scale(integral_scale(c)), ring_p)
        if not c.is_zero():
            extra.append(c)
    pol = WitnessPolicy(policy.member_generators, policy.single_variables, tuple(extra),
                        policy.max_iterations, policy.max_members)
    return closure(fp, pol, order)
