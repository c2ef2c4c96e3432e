from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knutson.errors import BadPrime, NotPrime, ZeroReduction
from knutson.field import GF, primes_upto
from knutson.groebner import Ideal
from knutson.hankel import HankelSpec, default_ring, hankel_policy, minor_ideal, seed_polynomial
from knutson.modp import (
    compare_initials,
    integral_form,
    integral_scale,
    knutson_family_mod_p,
    prime_scan,
    reduce_ideal,
    reduce_polynomial,
    reduced_ring,
    scan_summary,
    suspect_primes,
)
from knutson.polynomial import PolyRing, Polynomial

R2 = PolyRing(2)


def test_integral_scale():
    assert integral_scale(R2("1/2*x1 + 3/4*x2")) == 4
    assert integral_scale(R2("6*x1 + 4*x2")) == Fraction(1, 2)
    assert integral_scale(R2("6*x1 + 4*x2"), primitive=False) == 1
    F = integral_form(Ideal([R2("1/2*x1 + 3/4*x2")]))
    assert [str(g) for g in F.generators] == ["2*x1 + 3*x2"]


def test_reduce_polynomial():
    Rp = reduced_ring(R2, 5)
    assert Rp.field == GF(5)
    assert reduce_polynomial(R2("2*x1 + 7*x2"), Rp) == Rp("2*x1 + 2*x2")
    with pytest.raises(BadPrime):
        reduce_polynomial(R2("1/5*x1"), Rp)


def test_reduce_ideal():
    F = integral_form(Ideal([R2("1/2*x1 + 3/4*x2")]))
    assert reduce_ideal(F, 5).format() == ["x1 + 4*x2"]
    # a plain ideal keeps its content, so (3*x1) dies at 3
    with pytest.raises(ZeroReduction):
        reduce_ideal(Ideal([R2("3*x1")]), 3)
    assert reduce_ideal(integral_form(Ideal([R2("3*x1")])), 3).format() == ["x1"]


def test_bad_prime_example():
    I = Ideal([R2("2*x1 - x2")])
    rep = compare_initials(I, 2)
    assert rep.status == "bad" and not rep.match
    assert rep.lt_of_reduction.gens == ((0, 1),)
    assert rep.reduction_of_lt.gens == ((1, 0),)
    assert compare_initials(I, 3).match
    summary = scan_summary(prime_scan(I, primes_upto(50)))
    assert summary["bad_primes"] == [2]
    assert summary["scanned"] == primes_upto(50)
    assert summary["all_match_above_largest_bad"]
    assert suspect_primes(I) == [2]


def test_scan_validation():
    I = Ideal([R2("x1")])
    with pytest.raises(NotPrime):
        prime_scan(I, [2, 4])
    with pytest.raises(NotPrime):
        compare_initials(I, 9)
    assert prime_scan(I, []) == []
    assert [r.p for r in prime_scan(I, [7, 3, 3])] == [3, 7]


def test_vanishing_generators_flagged():
    rep = compare_initials(Ideal([R2("x1 + 1/3")]), 3)
    assert rep.status == "bad"


def test_to_json_round_trip():
    rep = compare_initials(Ideal([R2("2*x1 - x2")]), 2)
    js = rep.to_json()
    assert js["p"] == 2 and js["match"] is False


def test_hankel_ideals_have_no_bad_primes():
    spec = HankelSpec.square(3)
    ring = default_ring(spec)
    for t in (1, 2, 3):
        reports = prime_scan(minor_ideal(spec, t, ring), primes_upto(101))
        assert scan_summary(reports)["bad_primes"] == []


def test_family_mod_p_matches_rational_count():
    spec = HankelSpec.square(2)
    ring = default_ring(spec)
    f = seed_polynomial(spec, ring)
    fam = knutson_family_mod_p(f, 101, hankel_policy(spec, ring))
    assert len(fam) == 8 and fam.ring.field == GF(101)
    # the seed is made primitive first, so content never kills it
    assert len(knutson_family_mod_p(R2("2*x1*x2"), 2)) == 5


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3, unique=True),
       st.lists(st.integers(-30, 30).filter(bool), min_size=3, max_size=3),
       st.sampled_from([3, 5, 7, 11, 13]))
def test_reduction_commutes_with_arithmetic(monos, coeffs, p):
    f = Polynomial(R2, dict(zip(monos, coeffs)))
    g = R2("x1 - 2*x2 + 1")
    Rp = reduced_ring(R2, p)
    assert reduce_polynomial(f * g, Rp) == reduce_polynomial(f, Rp) * reduce_polynomial(g, Rp)
    assert reduce_polynomial(f + g, Rp) == reduce_polynomial(f, Rp) + reduce_polynomial(g, Rp)
