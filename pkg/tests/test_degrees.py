from itertools import combinations

import pytest

from pbwdegen.degrees import (
    GradingVector,
    PlueckerIndex,
    all_indices,
    complement_pairs,
    degree_s,
    fundamental_pattern,
    grading_vector,
    zero_grading,
)
from pbwdegen.weights import (
    NotInConeError,
    WeightSystem,
    abelian_weight_system,
    random_cone_points,
)


def oracle_min_cost(A, I):
    """Shortest path from the leading subset to I in the move graph.

    One move replaces an element i by some j > i not yet present, at cost
    a_{i,j}. Processing states by increasing element sum makes the graph
    acyclic, so negative costs are fine.
    """
    n, k = A.n, I.size
    states = sorted(combinations(range(1, n + 1), k), key=lambda s: (sum(s), s))
    dist = {tuple(range(1, k + 1)): 0}
    for st in states:
        if st not in dist:
            continue
        for i in st:
            for j in range(i + 1, n + 1):
                if j in st:
                    continue
                new = tuple(sorted(j if v == i else v for v in st))
                cost = dist[st] + A.a(i, j)
                if new not in dist or cost < dist[new]:
                    dist[new] = cost
    return dist[I.elems]


def test_index_validation():
    with pytest.raises(ValueError):
        PlueckerIndex(3, (1, 2, 3))  # not proper
    with pytest.raises(ValueError):
        PlueckerIndex(4, (2, 2))
    with pytest.raises(ValueError):
        PlueckerIndex(4, ())


def test_complement_pairs_examples():
    assert complement_pairs(PlueckerIndex(3, (2, 3))) == [(1, 3)]
    assert complement_pairs(PlueckerIndex(4, (3, 4))) == [(1, 4), (2, 3)]
    assert complement_pairs(PlueckerIndex(4, (1, 2))) == []
    assert complement_pairs(PlueckerIndex(5, (2, 4, 5))) == [(1, 5), (3, 4)]


def test_degree_matches_shortest_path_oracle():
    for n in (3, 4):
        for A in random_cone_points(n, 8, seed=n + 20):
            for k in range(1, n):
                for I in all_indices(n, k):
                    assert degree_s(A, I) == oracle_min_cost(A, I)


def test_degree_requires_cone_membership():
    A = WeightSystem.from_map(3, {(1, 2): 0, (2, 3): 0, (1, 3): 5})
    with pytest.raises(NotInConeError):
        degree_s(A, PlueckerIndex(3, (3,)))


def test_abelian_grading_n3():
    g = grading_vector(abelian_weight_system(3), (1, 2))
    want = {"1": 0, "2": 1, "3": 1, "1,2": 0, "1,3": 1, "2,3": 1}
    assert {I.label(): v for I, v in g.s.items()} == want
    assert g.to_json() == dict(sorted(want.items()))


def test_zero_grading():
    g = zero_grading(4, (2,))
    assert all(v == 0 for v in g.s.values())
    assert isinstance(g, GradingVector)


def test_grading_vector_validates_d():
    A = abelian_weight_system(4)
    with pytest.raises(ValueError):
        grading_vector(A, ())
    with pytest.raises(ValueError):
        grading_vector(A, (2, 1))
    with pytest.raises(ValueError):
        grading_vector(A, (1, 4))


def test_fundamental_patterns_exhaust_the_fundamental_polytope():
    from pbwdegen.fflv import DominantWeight, enumerate_patterns

    for n, k in [(3, 1), (3, 2), (4, 2), (4, 3)]:
        images = {fundamental_pattern(I).entries for I in all_indices(n, k)}
        target = {
            T.entries for T in enumerate_patterns(DominantWeight.fundamental(n, k))
        }
        assert len(images) == len(all_indices(n, k))  # injective
        assert images == target


def test_fundamental_pattern_support():
    I = PlueckerIndex(4, (3, 4))
    T = fundamental_pattern(I)
    assert set(T.support()) == {(1, 4), (2, 3)}
    assert T.value(1, 4) == 1
    assert fundamental_pattern(PlueckerIndex(4, (1, 2))).support() == []
