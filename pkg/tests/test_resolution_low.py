from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperell import (
    POSITIVE,
    UNKNOWN,
    DivisorClass,
    FactorizationType,
    betti_low,
    cohomology_scroll,
    count_distinct_betti,
    enumerate_types,
    in_low_degree,
    invert_from_resolution,
    low_invariants,
    n_nu_p_report,
    oracle_rao,
    rao_dimension,
    rao_profile,
    regularity,
)


@st.composite
def low_degree_types(draw, max_g=30):
    g = draw(st.integers(3, max_g))
    d = draw(st.integers(g + 3, 2 * g))
    return draw(st.sampled_from(enumerate_types(g, d)))


def rao_by_dimension_count(ft, j):
    """Third route to gamma_j, counting sections only.

    The restriction map from degree-j forms hits everything the scroll's
    sections hit, so the failure of j-normality is (sections on the curve)
    - (sections of the j-th hyperplane power on the scroll) + (sections
    vanishing on the curve).
    """
    g, m, b, d = ft.g, ft.m, ft.b, ft.degree
    e = g + 1 - b
    on_surface = cohomology_scroll(e, DivisorClass(j, j * m)).h0
    vanishing_on_curve = cohomology_scroll(e, DivisorClass(j - 2, j * m + b - 2 * g - 2)).h0
    on_curve = j * d - g + 1
    return on_curve - on_surface + vanishing_on_curve


def test_low_invariants_examples():
    inv = low_invariants(FactorizationType(10, 3, 9))
    assert (inv.nu, inv.tau, inv.p) == (8, 4, 0)
    inv = low_invariants(FactorizationType(10, 5, 8))
    assert (inv.nu, inv.tau, inv.p) == (4, 2, 1)
    for g in range(3, 13):
        inv = low_invariants(FactorizationType(g, 1, g + 1))
        assert (inv.nu, inv.tau, inv.p) == (g, g, 0)


@given(low_degree_types())
def test_p_positive_iff_ceiling_not_exact(ft):
    inv = low_invariants(ft)
    den = ft.m + ft.b - ft.g - 1
    assert (inv.p >= 1) == ((ft.b - 1) % den != 0)
    assert inv.p == den * inv.nu - ft.b + 1


def test_low_invariants_rejects_wrong_regime():
    with pytest.raises(ValueError):
        low_invariants(FactorizationType(10, 9, 3))  # d = 21 > 2g
    with pytest.raises(ValueError):
        low_invariants(FactorizationType(10, 2, 9))  # not very ample


def test_regularity_examples():
    assert regularity(FactorizationType(10, 3, 9)) == 9
    assert regularity(FactorizationType(10, 4, 10)) == 4
    for g in range(3, 13):
        assert regularity(FactorizationType(g, 1, g + 1)) == g + 1


def test_rao_dimension_examples():
    assert rao_dimension(FactorizationType(10, 3, 9), 3) == 8
    assert rao_dimension(FactorizationType(10, 4, 9), 2) == 4
    for g in range(3, 13):
        ft = FactorizationType(g, 1, g + 1)
        for j in range(1, g + 3):
            assert rao_dimension(ft, j) == max((j - 1) * (g - j), 0)


def test_rao_dimension_validation():
    ft = FactorizationType(10, 3, 9)
    assert rao_dimension(ft, 0) == 0 and rao_dimension(ft, 1) == 0
    with pytest.raises(ValueError):
        rao_dimension(ft, -1)
    with pytest.raises(ValueError):
        oracle_rao(ft, 1)


def test_oracle_rao_examples():
    assert oracle_rao(FactorizationType(10, 3, 9), 2) == 6
    assert oracle_rao(FactorizationType(10, 2, 11), 5) == 0
    # gamma_2 is always the gap 2g+1-d
    for g in range(3, 21):
        for d in range(g + 3, 2 * g + 1):
            for ft in enumerate_types(g, d):
                assert oracle_rao(ft, 2) == 2 * g + 1 - d


@settings(max_examples=200)
@given(low_degree_types(), st.integers(2, 24))
def test_rao_three_routes_agree(ft, j):
    value = rao_dimension(ft, j)
    assert value == oracle_rao(ft, j)
    assert value == rao_by_dimension_count(ft, j)


def test_rao_pinned_values_triple_checked():
    # two spot checks confirmed by all three routes
    ft = FactorizationType(10, 4, 8)
    assert rao_dimension(ft, 3) == oracle_rao(ft, 3) == rao_by_dimension_count(ft, 3) == 5
    ft = FactorizationType(10, 2, 11)
    assert rao_dimension(ft, 4) == oracle_rao(ft, 4) == rao_by_dimension_count(ft, 4) == 6


@settings(max_examples=150)
@given(low_degree_types())
def test_normality_threshold(ft):
    nu = low_invariants(ft).nu
    for j in range(2, nu + 4):
        assert (rao_dimension(ft, j) == 0) == (j >= nu)


def test_rao_profile_shape():
    profile = rao_profile(FactorizationType(10, 3, 9), 7)
    assert profile.gamma == ((1, 0), (2, 6), (3, 8), (4, 6), (5, 4), (6, 2), (7, 1))
    assert profile.values() == [0, 6, 8, 6, 4, 2, 1]
    with pytest.raises(ValueError):
        rao_profile(FactorizationType(10, 3, 9), 0)


def test_betti_low_structure_examples():
    # (4, 10): r = 8, nu = 3, tau = 2, p = 0
    diagram = betti_low(FactorizationType(10, 4, 10))
    assert diagram.r == 8
    for i in range(1, 9):
        assert diagram.entry(i, 1) == i * comb(7, i + 1)
    assert all(diagram.entry(i, 2) == UNKNOWN for i in range(1, 9))
    assert diagram.entry(1, 3) == POSITIVE
    assert all(diagram.entry(i, 3) == UNKNOWN for i in range(2, 8))
    assert diagram.entry(8, 3) == 3
    assert all(diagram.entry(i, j) == 0 for j in range(4, 10) for i in range(1, 9))

    # (3, 9): r = 5, nu = 8, tau = 4, p = 0
    diagram = betti_low(FactorizationType(10, 3, 9))
    assert all(diagram.entry(i, j) == 0 for j in (2, 3) for i in range(1, 6))
    assert all(diagram.entry(i, j) == UNKNOWN for j in range(4, 8) for i in range(1, 6))
    assert diagram.entry(1, 8) == POSITIVE
    assert all(diagram.entry(i, 8) == UNKNOWN for i in (2, 3, 4))
    assert diagram.entry(5, 8) == 6

    # (3, 11): r = 7, nu = 4, tau = 3, p = 2
    diagram = betti_low(FactorizationType(10, 3, 11))
    assert diagram.entry(1, 4) == 0 and diagram.entry(2, 4) == 0
    assert diagram.entry(3, 4) == POSITIVE
    assert diagram.entry(7, 4) == 4


def test_betti_low_quadric_count():
    # the linear strand starts at the number of quadrics through the curve,
    # which the Rao dimension corrects: C(r+2,2) - h0(L^2) + gamma_2
    for g in range(3, 21):
        for d in range(g + 3, 2 * g + 1):
            for ft in enumerate_types(g, d):
                r = d - g
                quadrics = comb(r + 2, 2) - (2 * d - g + 1) + rao_dimension(ft, 2)
                assert betti_low(ft).entry(1, 1) == quadrics == comb(r - 1, 2)


@settings(max_examples=100)
@given(low_degree_types())
def test_betti_low_markers(ft):
    inv = low_invariants(ft)
    diagram = betti_low(ft)
    r = diagram.r
    for j in range(2, inv.tau):
        assert all(diagram.entry(i, j) == 0 for i in range(1, r + 1))
    for j in range(inv.tau, inv.nu):
        assert all(diagram.entry(i, j) == UNKNOWN for i in range(1, r + 1))
    for i in range(1, inv.p + 1):
        assert diagram.entry(i, inv.nu) == 0
    assert diagram.entry(inv.p + 1, inv.nu) == POSITIVE
    assert diagram.entry(r, inv.nu) == 2 * ft.g + 1 - ft.degree
    assert diagram.max_row() == inv.nu
    assert not diagram.fully_known


def test_n_nu_p_report_examples():
    assert n_nu_p_report(FactorizationType(10, 5, 8)) == (4, 1, 2)
    assert n_nu_p_report(FactorizationType(10, 3, 11)) == (4, 2, 3)
    assert n_nu_p_report(FactorizationType(10, 4, 10)) == (3, None, 1)


def test_invert_examples():
    assert invert_from_resolution(10, 16, 7, 0) == FactorizationType(10, 4, 8)
    assert invert_from_resolution(10, 18, 4, 1) == FactorizationType(10, 5, 8)
    assert invert_from_resolution(10, 15, 5, 0) == FactorizationType(10, 2, 11)
    assert invert_from_resolution(10, 19, 3, 2) == FactorizationType(10, 4, 11)


def test_invert_rejects_inconsistent_data():
    with pytest.raises(ValueError, match="inconsistent resolution data"):
        invert_from_resolution(10, 19, 3, 9)
    with pytest.raises(ValueError, match="does not divide"):
        invert_from_resolution(10, 16, 5, 0)
    with pytest.raises(ValueError):
        invert_from_resolution(10, 16, 2, 0)


def test_invert_round_trip():
    for g in range(3, 31):
        for d in range(g + 3, 2 * g + 1):
            for ft in enumerate_types(g, d):
                inv = low_invariants(ft)
                assert invert_from_resolution(g, d, inv.nu, inv.p) == ft


def test_enumerate_examples():
    assert [(t.m, t.b) for t in enumerate_types(10, 18)] == [(6, 6), (5, 8), (4, 10)]
    assert [(t.m, t.b) for t in enumerate_types(10, 20)] == [(8, 4), (7, 6), (6, 8), (5, 10)]
    assert [(t.m, t.b) for t in enumerate_types(10, 13)] == [(1, 11)]
    assert enumerate_types(10, 12) == []
    assert enumerate_types(10, 5) == []


def test_enumerate_matches_direct_parameterization():
    # even degree 2k: (k-i, 2i) for g+2-k <= i <= (g+1)//2
    # odd degree 2k+1: (k-i, 2i+1) for g+1-k <= i <= g//2
    for g in range(2, 41):
        for d in range(g + 3, 2 * g + 1):
            k = d // 2
            if d % 2 == 0:
                expected = [(k - i, 2 * i) for i in range(g + 2 - k, (g + 1) // 2 + 1)]
            else:
                expected = [(k - i, 2 * i + 1) for i in range(g + 1 - k, g // 2 + 1)]
            assert [(t.m, t.b) for t in enumerate_types(g, d)] == expected


def test_count_distinct_examples():
    assert count_distinct_betti(10, 20) == 4
    assert count_distinct_betti(10, 18) == 3
    assert count_distinct_betti(10, 17) == 3
    with pytest.raises(ValueError):
        count_distinct_betti(10, 21)
    with pytest.raises(ValueError):
        count_distinct_betti(10, 12)


def test_count_matches_enumeration():
    for g in range(2, 41):
        for d in range(g + 3, 2 * g + 1):
            assert count_distinct_betti(g, d) == len(enumerate_types(g, d))


def test_distinct_types_have_distinct_nu_p():
    for g in range(3, 31):
        for d in range(g + 3, 2 * g + 1):
            pairs = [
                (low_invariants(ft).nu, low_invariants(ft).p) for ft in enumerate_types(g, d)
            ]
            assert len(set(pairs)) == len(pairs)


def test_in_low_degree():
    assert in_low_degree(FactorizationType(10, 3, 9))
    assert not in_low_degree(FactorizationType(10, 9, 3))
    assert not in_low_degree(FactorizationType(10, 2, 9))
