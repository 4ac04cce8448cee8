from fractions import Fraction

import pytest

from pbwdegen.fflv import DominantWeight, enumerate_patterns
from pbwdegen.ideals import initial_part, plucker_relations
from pbwdegen.degrees import grading_vector
from pbwdegen.representations import (
    annihilator_monomial_check,
    classical_action,
    cyclic_module_dim,
    degenerate_action,
    exp_coordinates,
    fflv_basis_check,
    graded_bracket,
    highest_weight_tensor,
    psi_substitution_check,
    verify_lie_structure,
)
from pbwdegen.weights import (
    NotInConeError,
    abelian_weight_system,
    canonical_weight_systems,
    toric_weight_system,
    zero_weight_system,
)


def test_classical_action_signs():
    assert classical_action(1, 3, (1, 2)) == ((2, 3), -1)
    assert classical_action(1, 2, (1, 3)) == ((2, 3), 1)
    assert classical_action(2, 4, (1, 2)) == ((1, 4), 1)
    assert classical_action(1, 2, (2, 3)) is None
    assert classical_action(1, 3, (1, 3)) is None


def test_degenerate_action_filters_by_degree():
    A = abelian_weight_system(3)
    # s_{13} = a_{2,3} = 1 and s_1 = 0, so f_{1,3} (degree 1) survives
    assert degenerate_action(A, 1, 3, (1,)) == ((3,), 1)
    # s_3 = 1 but s_2 + a_{2,3} = 2, so f_{2,3} dies on e_2
    assert degenerate_action(A, 2, 3, (2,)) is None


def test_graded_bracket():
    zero = zero_weight_system(3)
    ab = abelian_weight_system(3)
    assert graded_bracket(zero, (1, 2), (2, 3)) == {(1, 3): -1}
    assert graded_bracket(zero, (2, 3), (1, 2)) == {(1, 3): 1}
    # the abelian degeneration has vanishing brackets throughout
    assert graded_bracket(ab, (1, 2), (2, 3)) == {}


def test_lie_structure_canonical_systems():
    for n in (3, 4):
        for _, A in canonical_weight_systems(n):
            assert verify_lie_structure(A)


def test_lie_structure_random_points():
    from pbwdegen.weights import random_cone_points

    for n, count in ((3, 7), (4, 7), (5, 6)):
        for A in random_cone_points(n, count, seed=n + 60):
            assert verify_lie_structure(A)


def test_degenerate_exp_is_min_grade_slice_of_classical():
    for n in (3, 4):
        for _, A in canonical_weight_systems(n):
            for k in range(1, n):
                classical = exp_coordinates(n, k)
                degenerate = exp_coordinates(n, k, A)
                for elems, poly in classical.items():
                    def zgrade(mono):
                        return sum(e * A.a(v[1], v[2]) for v, e in mono)

                    low = min(zgrade(m) for m in poly)
                    slice_ = {m: c for m, c in poly.items() if zgrade(m) == low}
                    assert degenerate.get(elems, {}) == slice_


def test_cyclic_dimensions_classical_limit():
    lam = DominantWeight(3, (1, 1))
    A = zero_weight_system(3)
    assert cyclic_module_dim(A, lam) == 8
    assert cyclic_module_dim(A, DominantWeight(3, (2, 0))) == 6


def test_cyclic_dimension_cap():
    with pytest.raises(RuntimeError):
        cyclic_module_dim(zero_weight_system(3), DominantWeight(3, (1, 1)), max_dim=3)


def test_fflv_basis_small():
    for _, A in canonical_weight_systems(3):
        for coeffs in ((1, 0), (1, 1)):
            assert fflv_basis_check(A, DominantWeight(3, coeffs))


def test_annihilator_requires_interior():
    with pytest.raises(NotInConeError):
        annihilator_monomial_check(
            zero_weight_system(3), DominantWeight(3, (1, 0))
        )
    assert annihilator_monomial_check(
        toric_weight_system(3), DominantWeight(3, (1, 0))
    )


def test_highest_weight_tensor_shape():
    lam = DominantWeight(4, (1, 0, 2))
    ((key, coeff),) = highest_weight_tensor(lam).items()
    assert key == ((1,), (1, 2, 3), (1, 2, 3))
    assert coeff == 1


def test_exp_coordinates_classical_n3():
    coords = exp_coordinates(3, 1)
    assert coords[(1,)] == {(): Fraction(1)}
    assert coords[(2,)] == {((("z", 1, 2), 1),): Fraction(1)}
    assert coords[(3,)] == {
        ((("z", 1, 3), 1),): Fraction(1),
        ((("z", 1, 2), 1), (("z", 2, 3), 1)): Fraction(1, 2),
    }


def test_exp_coordinates_toric_are_monomial():
    A = toric_weight_system(3)
    coords = exp_coordinates(3, 1, A)
    assert coords[(3,)] == {((("z", 1, 3), 1),): Fraction(1)}


def test_psi_kills_relations_and_detects_sign_errors():
    n, d = 3, (1, 2)
    (rel,) = plucker_relations(n, d)
    assert psi_substitution_check(rel, n, d)
    broken = rel + rel.scale(Fraction(0))  # copy
    m = max(broken.terms)
    broken.terms[m] = -broken.terms[m]
    assert not psi_substitution_check(broken, n, d)


def test_psi_degenerate_initial_parts():
    n, d = 3, (1, 2)
    (rel,) = plucker_relations(n, d)
    for _, A in canonical_weight_systems(n):
        init = initial_part(rel, grading_vector(A, d))
        assert psi_substitution_check(init, n, d, A)


def test_pattern_count_equals_cyclic_dim_degenerate():
    A = abelian_weight_system(3)
    for coeffs in ((1, 0), (0, 1), (1, 1)):
        lam = DominantWeight(3, coeffs)
        assert cyclic_module_dim(A, lam) == len(enumerate_patterns(lam))
