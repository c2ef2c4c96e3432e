"""Sum, intersection and colon of ideals.

Intersections use elimination: adjoin ``t`` in front of the variables with
a block order where ``t`` dominates and the old variables keep the
caller's order, then

    I cap J = (t*I + (1 - t)*J) cap S.

The t-free part of that reduced basis is already the reduced basis of the
intersection for the caller's order, so it is installed in the result's
cache.  Colon ideals are assembled generator by generator:

    I : (g) = (1/g) * (I cap (g)),   I : (g1..gk) = cap_i I : (gi).
"""

from __future__ import annotations

from typing import Optional

from .errors import AmbientMismatch, ExactDivisionError, ZeroIdeal, ZeroWitness
from .groebner import Ideal, ReducedGB, compute_reduced_gb
from .orders import TermOrder
from .polynomial import Polynomial, mono_div, mono_divides


def _check(I: Ideal, J: Ideal):
    if not I.ring.same_ambient(J.ring):
        raise AmbientMismatch("ideals live in different rings")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    return Ideal(I.generators + J.generators, I.ring)


def _with_order(I: Ideal, order: Optional[TermOrder]) -> Ideal:
    """View of I in the ring carrying ``order`` (shares no cache)."""
    ring = I.ring.with_order(order or I.ring.order)
    if ring is I.ring:
        return I
    out = Ideal(I.generators, ring)
    gb = I._gb.get(ring.order)
    if gb is not None:
        out._install_gb(gb)
    return out


def _lean_generators(I: Ideal) -> tuple:
    """The given generators or the reduced basis, whichever has fewer terms.

    Lex bases can be much bulkier than the input, and elimination cost
    grows quickly with input size.
    """
    basis = I.groebner().basis
    if sum(len(g.terms) for g in I.generators) < sum(len(g.terms) for g in basis):
        return I.generators
    return basis


def ideal_intersect(I: Ideal, J: Ideal, order: Optional[TermOrder] = None,
                    shortcuts: bool = True) -> Ideal:
    _check(I, J)
    order = order or I.ring.order
    I, J = _with_order(I, order), _with_order(J, order)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    if shortcuts:
        if J.contains_ideal(I):
            return I
        if I.contains_ideal(J):
            return J
    ext = ring.extended(0, "t")
    t = ext.var(0)
    one = ext.one()
    a, b = _lean_generators(I), _lean_generators(J)
    gens = [t * g.extend_ring(0, ext) for g in a] + [(one - t) * g.extend_ring(0, ext) for g in b]
    # t*I + (1-t)*J is nearly graded when I and J are; sugar suits that case only
    graded = all(g.is_homogeneous() for g in a + b)
    big = compute_reduced_gb(gens, ext, strategy="sugar" if graded else "normal")
    kept = [g.restrict(0, ring) for g in big.basis if not g.terms[0][0][0]]
    out = Ideal(kept, ring)
    out._install_gb(ReducedGB(tuple(kept), ring.order, ring))
    return out


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, raising ExactDivisionError if g does not divide f."""
    field = f.ring.field
    lc, lm = g.leading_term()
    work = dict(f.terms)
    quot: dict = {}
    key = f.ring.order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        if not mono_divides(lm, m):
            raise ExactDivisionError(f"{g} does not divide {f}")
        q = mono_div(m, lm)
        factor = field.div(c, lc)
        quot[q] = factor
        for gm, gc in g.terms:
            k = tuple(a + b for a, b in zip(gm, q))
            v = field.sub(work.get(k, field.zero), field.mul(factor, gc))
            if v == 0:
                work.pop(k, None)
            else:
                work[k] = v
    return Polynomial.from_dict(f.ring, quot)


def _colon_principal(I: Ideal, g: Polynomial) -> Ideal:
    ring = I.ring
    if I.contains(g):
        return Ideal.unit(ring)
    if g.is_constant():
        return I
    inter = ideal_intersect(I, Ideal([g], ring), shortcuts=False)
    quotients = [divide_exact(h, g) for h in inter.groebner().basis]
    return Ideal(quotients, ring)


def ideal_colon(I: Ideal, J: Ideal, order: Optional[TermOrder] = None) -> Ideal:
    _check(I, J)
    if J.is_zero():
        raise ZeroIdeal("colon by the zero ideal")
    I = _with_order(I, order)
    result = None
    for g in J.generators:
        part = _colon_principal(I, g.in_ring(I.ring))
        result = part if result is None else ideal_intersect(result, part)
    return result


def minimal_prime_by_witness(I: Ideal, c: Polynomial, order: Optional[TermOrder] = None) -> Ideal:
    """I : (c).  For radical I and c in every minimal prime but one, that prime."""
    if c.is_zero():
        raise ZeroWitness("witness must be nonzero")
    return ideal_colon(I, Ideal([c], I.ring), order)
