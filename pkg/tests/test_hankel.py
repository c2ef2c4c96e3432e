import pytest
from hypothesis import given, settings, strategies as st

from knutson.errors import OrderNotDiagonal
from knutson.field import GF
from knutson.hankel import (
    HankelSpec,
    all_minor_witnesses,
    build_matrix,
    compare_with_listed,
    default_ring,
    determinant,
    minor_ideal,
    minors,
    seed_polynomial,
    submatrices,
    theorem_family_shapes,
    verify_independence_of_m,
    verify_primary_dec,
    verify_theorem_membership,
)
from knutson.orders import GREVLEX
from knutson.polynomial import PolyRing
from oracles import leibniz_det


def test_spec_geometry():
    s = HankelSpec(3, 2, 7)
    assert (s.rows, s.cols, s.nvars, s.max_minor) == (3, 4, 6, 3)
    assert HankelSpec.square(3).shape == "square"
    assert HankelSpec.rect(2).shape == "rect"
    assert s.shape is None
    assert HankelSpec.square(2).label() == "X_2^(1,3)"
    with pytest.raises(ValueError):
        HankelSpec(4, 1, 3)
    with pytest.raises(ValueError):
        HankelSpec.of_shape(2, "round")


def test_build_matrix():
    spec = HankelSpec(2, 2, 5)
    R = PolyRing(5)
    M = [[str(e) for e in row] for row in build_matrix(spec, R)]
    assert M == [["x2", "x3", "x4"], ["x3", "x4", "x5"]]
    M = build_matrix(HankelSpec.square(3), PolyRing(5))
    assert all(M[i][j] == M[i + 1][j - 1] for i in range(2) for j in range(1, 3))


def test_submatrix_shapes():
    sq = submatrices(HankelSpec.square(3))
    assert (sq["P1"], sq["P2"], sq["Q"]) == (HankelSpec(2, 1, 4), HankelSpec(3, 2, 5),
                                            HankelSpec(2, 2, 4))
    rc = submatrices(HankelSpec.rect(2))
    assert (rc["P1"], rc["P2"], rc["Q"]) == (HankelSpec(2, 1, 3), HankelSpec(2, 2, 4),
                                            HankelSpec(2, 2, 3))


@pytest.mark.parametrize("spec", [HankelSpec.square(2), HankelSpec.square(3),
                                  HankelSpec(3, 1, 6), HankelSpec(2, 3, 6)])
def test_determinant_matches_leibniz(spec):
    R = PolyRing(spec.n)
    M = build_matrix(spec, R)
    k = spec.max_minor
    for r0 in range(spec.rows - k + 1):
        for c0 in range(spec.cols - k + 1):
            sub = [row[c0:c0 + k] for row in M[r0:r0 + k]]
            assert determinant(sub) == leibniz_det(sub)


def test_minors_have_diagonal_leads():
    R = PolyRing(5)
    M = build_matrix(HankelSpec.square(3), R)
    ms = minors(M, 2)
    assert len(ms) == len({m.terms for m in ms})
    assert R("x1*x3 - x2^2") in ms
    with pytest.raises(OrderNotDiagonal):
        minors(build_matrix(HankelSpec.square(3), PolyRing(5, order=GREVLEX)), 2)


def test_seed():
    assert str(seed_polynomial(HankelSpec.square(2))) == "x1*x2*x3 - x2^3"
    f = seed_polynomial(HankelSpec.rect(2))
    assert f.leading_monomial() == (1, 1, 1, 1) and f.total_degree() == 4
    f = seed_polynomial(HankelSpec.square(3))
    assert f.leading_monomial() == (1, 1, 1, 1, 1)
    with pytest.raises(OrderNotDiagonal):
        seed_polynomial(HankelSpec.square(2), PolyRing(3, order=GREVLEX))


def test_minor_ideal_edges():
    spec = HankelSpec.square(2)
    R = default_ring(spec)
    assert minor_ideal(spec, 0, R).is_unit()
    assert minor_ideal(spec, 1, R).format() == ["x3", "x2", "x1"]
    assert minor_ideal(spec, 2, R).format() == ["x1*x3 - x2^2"]


@settings(max_examples=20)
@given(st.integers(1, 3).flatmap(
    lambda t: st.tuples(st.just(t), st.integers(2 * t - 1, 6)).flatmap(
        lambda tn: st.tuples(st.just(tn[0]), st.just(tn[1]),
                             st.integers(tn[0], tn[1] + 1 - tn[0]),
                             st.integers(tn[0], tn[1] + 1 - tn[0])))))
def test_minor_ideal_independent_of_shape(args):
    t, n, m1, m2 = args
    assert verify_independence_of_m(t, n, m1, m2)


def test_independence_rejects_bad_shape():
    with pytest.raises(ValueError):
        verify_independence_of_m(3, 4, 3, 2)


def test_witnesses_are_monic_minors():
    spec = HankelSpec.square(2)
    W = all_minor_witnesses(spec)
    assert all(w.leading_term().coefficient == 1 for w in W)
    # single variables come from the default pool, not from here
    assert {str(w) for w in W} == {"x1*x3 - x2^2"}
    W = {str(w) for w in all_minor_witnesses(HankelSpec.square(3))}
    assert "x2*x4 - x3^2" in W and "x1*x3 - x2^2" in W


@pytest.mark.parametrize("t", [2, 3])
def test_primary_decomposition_m3(t):
    rep = verify_primary_dec(HankelSpec.square(3), t)
    assert rep["passed"], [c for c in rep["checks"] if not c["passed"]]


def test_primary_decomposition_values():
    rep = verify_primary_dec(HankelSpec.square(3), 3)
    assert rep["ideals"]["sum1"]["h_vector"] == [1, 2, 2, 1]
    assert rep["ideals"]["sum1"]["multiplicity"] == 6
    assert rep["ideals"]["sum2"]["h_vector"] == [1, 3, 1]
    assert rep["ideals"]["sum2"]["multiplicity"] == 5
    rep = verify_primary_dec(HankelSpec.square(3), 2)
    assert rep["ideals"]["sum1"]["multiplicity"] == 2
    assert rep["ideals"]["sum2"]["multiplicity"] == 1
    with pytest.raises(ValueError):
        verify_primary_dec(HankelSpec.rect(2), 2)
    with pytest.raises(ValueError):
        verify_primary_dec(HankelSpec.square(3), 4)


def test_square_m2_family_matches_listed_shapes():
    spec = HankelSpec.square(2)
    rep = verify_theorem_membership(spec)
    assert rep["passed"] and rep["members"] == 8
    cmp = rep["comparison"]
    assert cmp["missing_from_family"] == [] and cmp["unexpected_members"] == []
    assert sorted(b["role"] for b in cmp["boundary_members"]) == ["seed", "unit"]


def test_square_m3_family_over_prime_field():
    spec = HankelSpec.square(3)
    ring = default_ring(spec, GF(101))
    rep = verify_theorem_membership(spec, ring)
    assert rep["passed"] and rep["members"] == 14
    assert rep["comparison"]["matches_up_to_boundary"]


def test_rect_m2_family():
    rep = verify_theorem_membership(HankelSpec.rect(2))
    assert rep["passed"] and rep["members"] == 11
    assert "comparison" not in rep


def test_comparison_reports_missing():
    spec = HankelSpec.square(2)
    rep = verify_theorem_membership(spec)
    listed = theorem_family_shapes(spec)
    listed["bogus"] = minor_ideal(HankelSpec(1, 1, 1), 1, default_ring(spec))
    cmp = compare_with_listed(rep["family"], listed)
    assert cmp["missing_from_family"] == ["bogus"]
    assert not cmp["matches_up_to_boundary"]
