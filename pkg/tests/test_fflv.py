from math import comb

import pytest

from pbwdegen.fflv import (
    DominantWeight,
    DyckPath,
    TrianglePattern,
    cell_bound,
    dyck_paths,
    enumerate_patterns,
    is_fflv_pattern,
    minkowski_check,
    path_bound,
    path_sum,
    weyl_dim,
)


def catalan(m):
    return comb(2 * m, m) // (m + 1)


def test_dyck_path_count_closed_form():
    # a path from row start i to row end k is a ballot sequence, so there
    # are Catalan(k - i) of them for every start/end pair
    for n in (3, 4, 5, 6):
        want = sum((n - 1 - m) * catalan(m) for m in range(n - 1))
        assert len(dyck_paths(n)) == want


def test_dyck_path_validation():
    DyckPath(((1, 2),))
    DyckPath(((1, 2), (1, 3), (2, 3)))
    with pytest.raises(ValueError):
        DyckPath(())
    with pytest.raises(ValueError):
        DyckPath(((1, 3),))  # endpoints must sit in the top row
    with pytest.raises(ValueError):
        DyckPath(((1, 2), (2, 3)))  # illegal step


def test_path_bound_and_sum():
    lam = DominantWeight(4, (1, 0, 2))
    p = DyckPath(((1, 2), (1, 3), (1, 4), (2, 4), (3, 4)))
    assert path_bound(lam, p) == 1 + 0 + 2
    T = TrianglePattern.from_map(4, {(1, 2): 1, (1, 4): 2})
    assert path_sum(T, p) == 3


def test_pattern_counts_match_weyl_dimension():
    cases = [
        (3, (1, 0), 3),
        (3, (0, 1), 3),
        (3, (1, 1), 8),
        (3, (2, 1), 15),
        (4, (1, 0, 0), 4),
        (4, (0, 1, 0), 6),
        (4, (1, 0, 1), 15),
        (4, (1, 1, 1), 64),
    ]
    for n, coeffs, dim in cases:
        lam = DominantWeight(n, coeffs)
        assert weyl_dim(lam) == dim
        assert len(enumerate_patterns(lam)) == dim


def test_membership_respects_path_bounds():
    lam = DominantWeight(3, (1, 1))
    ok = TrianglePattern.from_map(3, {(1, 3): 2})
    too_big = TrianglePattern.from_map(3, {(1, 3): 3})
    assert is_fflv_pattern(ok, lam)
    assert not is_fflv_pattern(too_big, lam)


def test_cell_bound():
    lam = DominantWeight(4, (2, 1, 0))
    assert cell_bound(lam, 1, 2) == 2
    assert cell_bound(lam, 1, 4) == 3
    assert cell_bound(lam, 3, 4) == 0


def test_pattern_addition_and_json():
    a = TrianglePattern.from_map(3, {(1, 2): 1})
    b = TrianglePattern.from_map(3, {(1, 2): 1, (2, 3): 2})
    assert (a + b).as_map()[(1, 2)] == 2
    data = b.to_json()
    assert TrianglePattern.from_map(3, {
        tuple(int(x) for x in key.split(",")): val for key, val in data["t"].items()
    }) == b


def test_minkowski_beyond_fundamentals():
    lam = DominantWeight(3, (1, 1))
    mu = DominantWeight(3, (1, 0))
    assert minkowski_check(lam, mu)
    assert minkowski_check(DominantWeight(4, (1, 0, 1)), DominantWeight(4, (0, 1, 0)))


def test_weight_arithmetic():
    lam = DominantWeight(4, (1, 0, 2))
    mu = DominantWeight(4, (0, 1, 0))
    assert (lam + mu).coeffs == (1, 1, 2)
    assert lam.total() == 3
    assert lam.column_sizes() == (1, 3)
