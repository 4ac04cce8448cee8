"""Classical and degenerate actions on fundamental modules and tensors.

The degenerate action is the graded slice of the classical one: a lowering
generator survives on a wedge basis vector exactly when the coordinate
degrees match up. Everything is computed with exact rationals on explicit
bases, including the polynomial coordinates of nilpotent exponentials.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .degrees import PlueckerIndex, all_indices, degree_s
from .fflv import TrianglePattern, cell_bound, enumerate_patterns
from .linalg import Echelon
from .weights import NotInConeError, is_interior, triangle_pairs


def classical_action(i, j, elems):
    """Action of the lowering generator for (i, j) on a wedge basis tuple.

    Returns (new tuple, sign) or None. The sign counts entries strictly
    between i and j (transpositions needed to re-sort).
    """
    if i not in elems or j in elems:
        return None
    between = sum(1 for v in elems if i < v < j)
    new = tuple(sorted(j if v == i else v for v in elems))
    return new, (-1) ** between


@lru_cache(maxsize=None)
def _coordinate_degree(A, elems):
    return degree_s(A, PlueckerIndex(A.n, elems))


def degenerate_action(A, i, j, elems):
    """Classical action kept only when degrees match: s_I + a_{i,j} must
    equal the degree of the image coordinate."""
    res = classical_action(i, j, elems)
    if res is None:
        return None
    new, sign = res
    if _coordinate_degree(A, elems) + A.a(i, j) != _coordinate_degree(A, new):
        return None
    return new, sign


def _action(A, i, j, elems):
    if A is None:
        return classical_action(i, j, elems)
    return degenerate_action(A, i, j, elems)


# -- Lie structure -----------------------------------------------------------


def graded_bracket(A, x, y):
    """Bracket of two generators in the associated graded algebra, as a
    dict root -> coefficient.

    With the generators realized as matrix units (f_{i,j} maps e_i to
    e_j), the surviving bracket is [f_{i,j}, f_{j,l}] = -f_{i,l}; the
    degeneration keeps it only when the degrees add up.
    """
    if x == y:
        return {}
    (i, j), (k, l) = x, y
    if i > k:
        return {root: -c for root, c in graded_bracket(A, y, x).items()}
    if j == k and A.a(i, j) + A.a(k, l) == A.a(i, l):
        return {(i, l): -1}
    return {}


def _module_map(A, n, k, x):
    """Generator x as a partial map on the wedge basis of size k."""
    out = {}
    for I in all_indices(n, k):
        res = _action(A, *x, I.elems)
        if res is not None:
            out[I.elems] = res
    return out


def verify_lie_structure(A):
    """Antisymmetry and Jacobi for the graded bracket, plus the commutator
    identity on every fundamental module."""
    n = A.n
    gens = triangle_pairs(n)

    def combo_bracket(combo, y):
        out = {}
        for x, c in combo.items():
            for root, c2 in graded_bracket(A, x, y).items():
                out[root] = out.get(root, 0) + c * c2
        return {r: c for r, c in out.items() if c}

    for x in gens:
        for y in gens:
            lhs = graded_bracket(A, x, y)
            rhs = {r: -c for r, c in graded_bracket(A, y, x).items()}
            if lhs != rhs:
                return False
    for x in gens:
        for y in gens:
            for z in gens:
                total = {}
                for term in (
                    combo_bracket(graded_bracket(A, x, y), z),
                    combo_bracket(graded_bracket(A, y, z), x),
                    combo_bracket(graded_bracket(A, z, x), y),
                ):
                    for r, c in term.items():
                        total[r] = total.get(r, 0) + c
                if any(total.values()):
                    return False

    for k in range(1, n):
        maps = {x: _module_map(A, n, k, x) for x in gens}
        for x in gens:
            for y in gens:
                comm = {}
                for col in maps[y]:
                    mid, s1 = maps[y][col]
                    if mid in maps[x]:
                        row, s2 = maps[x][mid]
                        comm[(col, row)] = comm.get((col, row), 0) + s1 * s2
                for col in maps[x]:
                    mid, s1 = maps[x][col]
                    if mid in maps[y]:
                        row, s2 = maps[y][mid]
                        comm[(col, row)] = comm.get((col, row), 0) - s1 * s2
                expected = {}
                for root, c in graded_bracket(A, x, y).items():
                    for col, (row, sign) in maps[root].items():
                        expected[(col, row)] = expected.get((col, row), 0) + c * sign
                comm = {k2: v for k2, v in comm.items() if v}
                expected = {k2: v for k2, v in expected.items() if v}
                if comm != expected:
                    return False
    return True


# -- tensor products ---------------------------------------------------------


def _tensor_factors(lam):
    factors = []
    for k in range(1, lam.n):
        factors.extend([k] * lam.a(k))
    return factors


def highest_weight_tensor(lam):
    key = tuple(tuple(range(1, k + 1)) for k in _tensor_factors(lam))
    return {key: Fraction(1)}


def apply_generator(A, state, x):
    """Leibniz action of one generator across all tensor factors."""
    i, j = x
    out = {}
    for key, coeff in state.items():
        for t, factor in enumerate(key):
            res = _action(A, i, j, factor)
            if res is None:
                continue
            new, sign = res
            newkey = key[:t] + (new,) + key[t + 1 :]
            val = out.get(newkey, Fraction(0)) + coeff * sign
            if val:
                out[newkey] = val
            else:
                out.pop(newkey, None)
    return out


def apply_pattern_monomial(A, state, T):
    """Apply the product of generators with exponents T, factors ordered
    lexicographically by (i, j)."""
    for pair in triangle_pairs(T.n):
        for _ in range(T.value(*pair)):
            state = apply_generator(A, state, pair)
            if not state:
                return state
    return state


def cyclic_module_dim(A, lam, max_dim=100000):
    """Dimension of the cyclic submodule generated by the highest weight
    tensor under the degenerate action."""
    gens = triangle_pairs(lam.n)
    ech = Echelon()
    w = highest_weight_tensor(lam)
    ech.insert(w)
    queue = [w]
    while queue:
        vec = queue.pop()
        for x in gens:
            img = apply_generator(A, vec, x)
            if img and ech.insert(img) is not None:
                if ech.rank > max_dim:
                    raise RuntimeError("cyclic closure exceeded the size bound")
                queue.append(img)
    return ech.rank


def fflv_basis_check(A, lam):
    """The pattern monomials applied to the highest weight tensor are
    linearly independent and span the cyclic module."""
    patterns = enumerate_patterns(lam)
    ech = Echelon()
    for T in patterns:
        vec = apply_pattern_monomial(A, highest_weight_tensor(lam), T)
        if not vec or ech.insert(vec) is None:
            return False
    return ech.rank == cyclic_module_dim(A, lam)


def annihilator_monomial_check(A, lam):
    """For interior weight systems the annihilator is monomial: a bounded
    exponent triangle kills the cyclic vector iff it is not a pattern."""
    if not is_interior(A):
        raise NotInConeError("monomial annihilator requires an interior weight system")
    n = lam.n
    pairs = triangle_pairs(n)
    bounds = [cell_bound(lam, i, j) for i, j in pairs]
    inside = {T.entries for T in enumerate_patterns(lam)}
    for entries in product(*[range(b + 1) for b in bounds]):
        S = TrianglePattern(n, entries)
        vec = apply_pattern_monomial(A, highest_weight_tensor(lam), S)
        if (entries in inside) != bool(vec):
            return False
    return True


# -- exponential coordinates and the substitution oracle ---------------------
# Polynomials in the variables z_{i,j} (one per generator) and z_k (one per
# column size) are dicts: sorted ((var, exponent), ...) tuples -> Fraction.


def zp_scale(p, c):
    c = Fraction(c)
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def zp_add(p, q):
    out = dict(p)
    for m, v in q.items():
        new = out.get(m, Fraction(0)) + v
        if new:
            out[m] = new
        else:
            out.pop(m, None)
    return out


def zp_mul(p, q):
    out = {}
    for m1, v1 in p.items():
        for m2, v2 in q.items():
            exps = {}
            for var, e in m1 + m2:
                exps[var] = exps.get(var, 0) + e
            key = tuple(sorted(exps.items()))
            new = out.get(key, Fraction(0)) + v1 * v2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def zp_var(var):
    return {((var, 1),): Fraction(1)}


ZP_ONE = {(): Fraction(1)}


def exp_coordinates(n, k, A=None):
    """Coordinates of exp(sum z_{i,j} f_{i,j}) applied to the highest
    wedge vector, as polynomials in the z_{i,j}.

    The classical mode uses the full action, the degenerate mode (weight
    system given) its graded slice; the exponential truncates because the
    action is nilpotent.
    """
    start = tuple(range(1, k + 1))
    term = {start: ZP_ONE}
    total = {start: ZP_ONE}
    order = 1
    while term:
        nxt = {}
        for elems, poly in term.items():
            for pair in triangle_pairs(n):
                res = _action(A, *pair, elems)
                if res is None:
                    continue
                new, sign = res
                contrib = zp_mul(
                    zp_var(("z",) + pair), zp_scale(poly, Fraction(sign, order))
                )
                nxt[new] = zp_add(nxt.get(new, {}), contrib)
        term = {e: p for e, p in nxt.items() if p}
        for elems, poly in term.items():
            total[elems] = zp_add(total.get(elems, {}), poly)
        order += 1
    return total


def psi_substitution_check(f, n, d, A=None):
    """Substitute X_I -> z_{|I|} * C_I into a polynomial and test for zero.

    C_I are the exponential coordinates (classical or degenerate); the
    kernel of this substitution is the defining ideal, so relations must
    vanish.
    """
    coords = {k: exp_coordinates(n, k, A) for k in d}
    total = {}
    for mono, coeff in f.terms.items():
        prod = dict(ZP_ONE)
        for elems, e in mono:
            k = len(elems)
            factor = zp_mul(zp_var(("col", k)), coords[k].get(elems, {}))
            for _ in range(e):
                prod = zp_mul(prod, factor)
        total = zp_add(total, zp_scale(prod, coeff))
    return not total
