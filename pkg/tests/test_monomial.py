from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from knutson.monomial import (
    MonomialIdeal,
    hilbert_summary,
    monomial_colon,
    monomial_intersect,
    squarefree_monomial_ideals,
    sum_hvector_from_parts,
    theoretical_hankel_height,
    theoretical_hankel_hvector,
    theoretical_hankel_multiplicity,
)
from oracles import (
    brute_colon,
    brute_intersection,
    minimal,
    series_from_h,
    squarefree_ideals_by_upsets,
    standard_monomial_counts,
    stanley_reisner,
)


def monomial_ideals(n, max_exp=3, max_gens=4):
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.lists(mono, min_size=1, max_size=max_gens)


def squarefree_ideals(n, max_gens=5):
    mono = st.tuples(*[st.integers(0, 1)] * n)
    return st.lists(mono, min_size=1, max_size=max_gens)


def test_minimal_generators():
    M = MonomialIdeal(3, [(1, 1, 0), (1, 0, 0), (0, 2, 1), (0, 3, 1)])
    assert M.gens == ((0, 2, 1), (1, 0, 0))
    assert M.contains((2, 5, 0)) and not M.contains((0, 1, 7))
    assert MonomialIdeal(2, [(1, 0), (0, 0)]).is_unit()
    assert MonomialIdeal(2).is_zero()
    assert str(MonomialIdeal(3, [(1, 0, 1), (0, 1, 0)])) == "(x2, x1*x3)"


def test_intersect_and_colon_examples():
    a = MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)])
    b = MonomialIdeal(3, [(0, 1, 0), (0, 0, 1)])
    assert monomial_intersect(a, b).gens == ((0, 1, 0), (1, 0, 1))
    M = MonomialIdeal(3, [(1, 1, 1)])
    assert monomial_colon(M, MonomialIdeal(3, [(1, 0, 1)])).gens == ((0, 1, 0),)
    assert monomial_colon(M, M).is_unit()


def test_hilbert_examples():
    # twisted cubic style initial ideal (x1x3) in 3 variables: a hypersurface
    s = hilbert_summary(MonomialIdeal(3, [(1, 0, 1)]))
    assert (s.dim, s.height, s.h, s.multiplicity) == (2, 1, (1, 1), 2)
    s = hilbert_summary(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert (s.dim, s.height, s.h, s.multiplicity) == (0, 3, (1,), 1)
    s = hilbert_summary(MonomialIdeal.unit(3))
    assert s.dim is None and s.multiplicity == 0
    assert s.to_json()["dim"] == "-inf"
    s = hilbert_summary(MonomialIdeal(2))
    assert (s.dim, s.height, s.h) == (2, 0, (1,))


@settings(max_examples=80)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), monomial_ideals(n), monomial_ideals(n))))
def test_intersection_matches_brute_force(data):
    n, a, b = data
    got = monomial_intersect(MonomialIdeal(n, a), MonomialIdeal(n, b))
    assert set(got.gens) == brute_intersection(a, b, n)


@settings(max_examples=80)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), monomial_ideals(n), monomial_ideals(n, 2, 2))))
def test_colon_matches_brute_force(data):
    n, a, b = data
    got = monomial_colon(MonomialIdeal(n, a), MonomialIdeal(n, b))
    assert set(got.gens) == brute_colon(a, b, n)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), monomial_ideals(n))))
def test_hilbert_series_counts_standard_monomials(data):
    n, gens = data
    s = hilbert_summary(MonomialIdeal(n, gens))
    upto = 7
    expected = standard_monomial_counts(gens, n, upto)
    if s.dim is None:
        assert not any(expected)
    else:
        assert series_from_h(list(s.h), s.dim, upto) == expected
        assert s.height == n - s.dim


@pytest.mark.parametrize("n", range(1, 7))
def test_stanley_reisner_dimension_oracle(n):
    @settings(max_examples=40)
    @given(squarefree_ideals(n))
    def check(gens):
        M = MonomialIdeal(n, gens)
        assert M.is_squarefree()
        s = hilbert_summary(M)
        sr = stanley_reisner(gens, n)
        if sr is None:
            assert s.dim is None
        else:
            d, h, e = sr
            assert (s.dim, list(s.h), s.multiplicity) == (d, h, e)
            assert s.height == n - d

    check()


def test_squarefree_enumeration_counts():
    assert len(squarefree_monomial_ideals(3)) == 19
    ideals = squarefree_monomial_ideals(4)
    assert len(ideals) == 167
    assert {frozenset(M.gens) for M in ideals} == squarefree_ideals_by_upsets(4)


@pytest.mark.parametrize("t,s", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (2, 5), (3, 4)])
def test_closed_form_hvector(t, s):
    h = theoretical_hankel_hvector(t, s)
    assert h.entries == tuple(comb(s - t + i, i) for i in range(t))
    assert h.entries[-1] == comb(s - 1, t - 1)
    assert theoretical_hankel_multiplicity(t, s) == comb(s, t - 1)
    n = t + s - 1
    assert theoretical_hankel_height(t, n) == n - 2 * t + 2


def test_closed_form_rejects_bad_sizes():
    with pytest.raises(ValueError):
        theoretical_hankel_hvector(3, 2)
    with pytest.raises(ValueError):
        theoretical_hankel_height(3, 4)


def test_sum_hvector_from_parts():
    assert sum_hvector_from_parts((1, 2), "P1P2") == (1, 3, 1)
    assert sum_hvector_from_parts((1, 2), "XQ") == (1, 1)
    assert sum_hvector_from_parts((1, 1, 1), "P1P2") == (1, 2, 3, 2, 1)
    with pytest.raises(ValueError):
        sum_hvector_from_parts((1,), "other")


@given(squarefree_ideals(4), squarefree_ideals(4))
def test_squarefree_closed_under_operations(a, b):
    A, B = MonomialIdeal(4, a), MonomialIdeal(4, b)
    assert (A + B).is_squarefree()
    assert A.intersect(B).is_squarefree()
    assert monomial_colon(A, B).is_squarefree()
    assert set((A + B).gens) == minimal(a + b)
