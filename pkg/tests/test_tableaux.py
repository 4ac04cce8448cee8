import pytest

from pbwdegen.fflv import DominantWeight, TrianglePattern, enumerate_patterns, weyl_dim
from pbwdegen.tableaux import (
    PBWTableau,
    empty_tableau,
    enumerate_ssyt,
    is_pbw_ssyt,
    is_pbw_tableau,
    order_preceq,
    pbw_column,
    tau,
    zeta,
)


def test_column_arrangement():
    # small entries sit on their own row, large ones fill the gaps downwards
    assert pbw_column(4, {2, 4}) == (4, 2)
    assert pbw_column(4, {1, 2}) == (1, 2)
    assert pbw_column(5, {1, 4, 5}) == (1, 5, 4)
    assert pbw_column(5, {2, 3, 5}) == (5, 2, 3)


def test_tableau_validation():
    with pytest.raises(ValueError):
        PBWTableau(3, ((1,), (1, 2)))  # heights increase
    with pytest.raises(ValueError):
        PBWTableau(3, ((1, 2, 3),))  # height n-1 exceeded
    with pytest.raises(ValueError):
        PBWTableau(3, ((4,),))  # entry out of range


def test_column_conditions():
    assert is_pbw_tableau(PBWTableau(4, ((4, 2),)))
    assert not is_pbw_tableau(PBWTableau(4, ((2, 4),)))  # 2 off its row
    assert not is_pbw_tableau(PBWTableau(4, ((3, 3),)))  # repeated entry
    assert not is_pbw_tableau(PBWTableau(5, ((1, 3, 4),)))  # big block increasing


def test_adjacency_condition():
    good = PBWTableau(3, ((1, 3), (3,)))
    assert is_pbw_ssyt(good)
    bad = PBWTableau(3, ((1, 2), (3,)))
    assert is_pbw_tableau(bad)
    assert not is_pbw_ssyt(bad)


def test_order_preceq():
    assert order_preceq({1, 3}, {3}, 3)
    assert not order_preceq({1, 2}, {3}, 3)
    assert not order_preceq({3}, {1, 3}, 3)  # shorter column cannot precede
    with pytest.raises(ValueError):
        order_preceq(set(), {1}, 3)


def test_enumeration_matches_dimension():
    for n, coeffs in [(3, (1, 1)), (3, (2, 0)), (4, (1, 0, 1)), (4, (0, 2, 0))]:
        lam = DominantWeight(n, coeffs)
        assert len(enumerate_ssyt(lam)) == weyl_dim(lam)


def test_empty_shape():
    lam = DominantWeight.zero(3)
    assert enumerate_ssyt(lam) == [empty_tableau(3)]
    assert tau(empty_tableau(3)) == TrianglePattern.zero(3)


def test_zeta_example():
    lam = DominantWeight(3, (1, 1))
    T = TrianglePattern.from_map(3, {(1, 3): 1, (2, 3): 1})
    Y = zeta(T, lam)
    assert Y.columns == ((1, 3), (3,))
    assert tau(Y) == T


def test_single_column_tau_is_fundamental_pattern():
    from itertools import combinations

    from pbwdegen.degrees import PlueckerIndex, fundamental_pattern

    n = 4
    for k in (1, 2, 3):
        for content in combinations(range(1, n + 1), k):
            Y = PBWTableau(n, (pbw_column(n, content),))
            assert tau(Y) == fundamental_pattern(PlueckerIndex(n, content))


def test_round_trip_small():
    for n, coeffs in [(3, (1, 1)), (4, (1, 1, 0)), (4, (0, 1, 1))]:
        lam = DominantWeight(n, coeffs)
        for T in enumerate_patterns(lam):
            assert tau(zeta(T, lam)) == T
        for Y in enumerate_ssyt(lam):
            assert zeta(tau(Y), lam) == Y


def test_zeta_rejects_outside_patterns():
    lam = DominantWeight(3, (1, 0))
    T = TrianglePattern.from_map(3, {(1, 3): 2})
    with pytest.raises(ValueError):
        zeta(T, lam)


def test_shape_and_json():
    Y = PBWTableau(4, ((1, 3), (4,)))
    assert Y.shape() == DominantWeight(4, (1, 1, 0))
    assert PBWTableau.from_json(Y.to_json()) == Y
