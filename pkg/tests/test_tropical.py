from fractions import Fraction

import pytest

from pbwdegen.degrees import PlueckerIndex, degree_s
from pbwdegen.ideals import initial_part
from pbwdegen.tropical import (
    TropicalPoint,
    cone_C_membership,
    grading_from_point,
    h_image_rank,
    in_trop_necessary_check,
    map_h,
    maximality_witness,
    normalize,
    point_from_triangle,
    proper_subsets,
)
from pbwdegen.weights import (
    abelian_weight_system,
    canonical_weight_systems,
    random_cone_points,
    toric_weight_system,
)


def test_proper_subsets_count():
    for n in (3, 4, 5):
        assert len(proper_subsets(n)) == 2**n - 2


def test_point_validation():
    with pytest.raises(ValueError):
        TropicalPoint(3, {(1,): 0})


def test_map_h_agrees_with_degrees():
    A = toric_weight_system(4)
    point = map_h(A)
    for elems in proper_subsets(4):
        assert point.value(elems) == degree_s(A, PlueckerIndex(4, elems))


def test_normalize_idempotent():
    A = abelian_weight_system(4)
    shifted = TropicalPoint(
        4, {e: v + Fraction(5, 2) for e, v in map_h(A).s.items()}
    )
    once = normalize(shifted)
    assert normalize(once) == once
    for k in range(1, 4):
        assert once.value(tuple(range(1, k + 1))) == 0


def test_cone_membership_of_image():
    for n in (3, 4):
        for _, A in canonical_weight_systems(n):
            ok, violations = cone_C_membership(map_h(A))
            assert ok, violations
        for A in random_cone_points(n, 10, seed=n + 40):
            assert cone_C_membership(map_h(A))[0]


def test_violating_point_reports_conditions():
    s = point_from_triangle(3, {(1, 2): 0, (2, 3): 0, (1, 3): 1})
    ok, violations = cone_C_membership(s)
    assert not ok
    assert violations == ["[iv] i=1"]
    t = point_from_triangle(
        4, {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 3): 0, (2, 4): 0, (1, 4): 2}
    )
    ok, violations = cone_C_membership(t)
    assert not ok
    assert "[v] i=1 j=3" in violations


def test_witness_is_monomial_after_degeneration():
    s = point_from_triangle(3, {(1, 2): 0, (2, 3): 0, (1, 3): 1})
    w = maximality_witness(s)
    assert w is not None
    g = grading_from_point(s, (1, 2))
    assert len(initial_part(w, g).terms) == 1
    # members of the cone have no witness
    assert maximality_witness(map_h(abelian_weight_system(3))) is None


def test_witness_requires_linear_conditions():
    s = map_h(abelian_weight_system(3))
    coords = dict(s.s)
    coords[(2, 3)] = Fraction(7)
    broken = TropicalPoint(3, coords)
    with pytest.raises(ValueError):
        maximality_witness(broken)


def test_bounded_membership_check():
    s = map_h(abelian_weight_system(3))
    assert in_trop_necessary_check(s, (1, 2), 3)
    bad = point_from_triangle(3, {(1, 2): 0, (2, 3): 0, (1, 3): 1})
    assert not in_trop_necessary_check(bad, (1, 2), 2)


def test_condition_ii_index_families():
    # hand-built families: each shares the single complement pair (i, j)
    families = {
        (3, (1, 3)): [(3,), (2, 3)],
        (4, (1, 3)): [(3,), (2, 3)],
        (4, (1, 4)): [(4,), (2, 4), (2, 3, 4)],
        (4, (2, 4)): [(1, 4), (1, 3, 4)],
    }
    for (n, (i, j)), elems_list in families.items():
        for A in random_cone_points(n, 5, seed=n + 50):
            s = map_h(A)
            values = {s.value(elems) for elems in elems_list}
            assert values == {A.a(i, j)}


def test_grading_from_point_sizes():
    s = map_h(toric_weight_system(4))
    g = grading_from_point(s, (2,))
    assert set(I.size for I in g.s) == {2}
    assert g.grade(PlueckerIndex(4, (3, 4))) == s.value((3, 4))


def test_h_image_rank():
    for n in (2, 3, 4, 5, 6):
        assert h_image_rank(n) == n * (n - 1) // 2


def test_json_round_trip_with_rationals():
    A = abelian_weight_system(3)
    s = TropicalPoint(3, {e: v + Fraction(1, 3) for e, v in map_h(A).s.items()})
    data = s.to_json()
    assert data["s"]["1,2"] == "1/3"
    assert TropicalPoint.from_json(data) == s
