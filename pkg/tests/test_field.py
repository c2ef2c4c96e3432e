from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knutson.errors import BadPrime, DivisionByZero, NotPrime
from knutson.field import (
    GF,
    QQ,
    PrimeFieldElement,
    field_add,
    field_from_characteristic,
    field_inv,
    field_mul,
    field_neg,
    is_prime,
    primes_upto,
    reduce_rational_mod_p,
)
from oracles import trial_division_prime

PRIMES = [2, 3, 5, 7, 101, 65521, 2**31 - 1]

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def test_examples():
    assert field_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert field_mul(PrimeFieldElement(3, 7), PrimeFieldElement(5, 7)) == PrimeFieldElement(1, 7)
    assert field_inv(PrimeFieldElement(2, 5)) == PrimeFieldElement(3, 5)
    assert field_neg(PrimeFieldElement(0, 5)) == 0
    with pytest.raises(DivisionByZero):
        field_inv(PrimeFieldElement(0, 5))
    with pytest.raises(DivisionByZero):
        field_inv(Fraction(0))


def test_prime_field_validation():
    with pytest.raises(NotPrime):
        GF(4)
    with pytest.raises(NotPrime):
        GF(1)
    with pytest.raises(ValueError):
        PrimeFieldElement(1, 6)
    assert field_from_characteristic(0) is QQ
    assert field_from_characteristic(101) == GF(101)


def test_reduce_rational():
    assert reduce_rational_mod_p(Fraction(1, 2), 5) == PrimeFieldElement(3, 5)
    assert reduce_rational_mod_p(Fraction(-3, 4), 7).residue == (-3 * pow(4, -1, 7)) % 7
    with pytest.raises(BadPrime):
        reduce_rational_mod_p(Fraction(1, 6), 3)


def test_mixed_characteristic_rejected():
    with pytest.raises(ValueError):
        PrimeFieldElement(1, 5) + PrimeFieldElement(1, 7)


@given(st.integers(min_value=-50, max_value=5000))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == trial_division_prime(n)


def test_large_primes():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(rationals, rationals, rationals)
def test_rational_axioms(a, b, c):
    F = QQ
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a != 0:
        assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = GF(p)
    a, b, c = F.convert(a), F.convert(b), F.convert(c)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.zero) == a and F.mul(a, F.one) == a
    assert F.add(a, F.neg(a)) == 0
    if a != 0:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(b, a) == F.mul(b, F.inv(a))


@given(st.sampled_from(PRIMES), rationals, rationals)
def test_reduction_is_a_ring_map(p, a, b):
    try:
        ra, rb = reduce_rational_mod_p(a, p), reduce_rational_mod_p(b, p)
    except BadPrime:
        return
    assert reduce_rational_mod_p(a + b, p) == ra + rb
    assert reduce_rational_mod_p(a * b, p) == ra * rb


@given(st.sampled_from(PRIMES), st.integers(min_value=1), st.integers())
def test_element_operators(p, a, b):
    x, y = PrimeFieldElement(a % p, p), PrimeFieldElement(b % p, p)
    assert (x + y).residue == (a + b) % p
    assert (x - y).residue == (a - b) % p
    assert (x * y).residue == (a * b) % p
    assert (-x).residue == (-a) % p
    if x != 0:
        assert (y / x) * x == y
