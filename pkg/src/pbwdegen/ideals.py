"""Pluecker relations and exact graded components of their ideal.

Polynomials live in the multigraded coordinate ring with one variable
per Pluecker index of each size in d. A monomial is a sorted tuple of
(index elems, exponent) pairs; coefficients are exact rationals. All
component computations fix the monomial order (grading ascending, then
lexicographic on the exponent lists) so outputs are deterministic.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .degrees import PlueckerIndex, all_indices, grading_vector, zero_grading
from .linalg import Echelon, canonical_rows
from .weights import face_contains, face_signature


def normalize_index(n, seq):
    """Sort an arbitrary tuple into a Pluecker index with the sign of the
    sorting permutation; repeated entries give sign 0."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        return None, 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return PlueckerIndex(n, tuple(sorted(seq))), sign


# -- monomials ---------------------------------------------------------------
# A monomial is a tuple of ((i_1, ..., i_k), exponent) pairs sorted by index.


def mono_mul(m1, m2):
    exps = {}
    for elems, e in m1 + m2:
        exps[elems] = exps.get(elems, 0) + e
    return tuple(sorted(exps.items()))


def mono_multidegree(m, d):
    counts = {k: 0 for k in d}
    for elems, e in m:
        counts[len(elems)] += e
    return tuple(counts[k] for k in d)


def mono_grade(m, g):
    return sum(e * g.grade(PlueckerIndex(g.n, elems)) for elems, e in m)


def mono_str(m):
    parts = []
    for elems, e in m:
        name = "X_{%s}" % ",".join(str(v) for v in elems)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class GradedPolynomial:
    """Sparse polynomial in Pluecker variables with rational coefficients."""

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[m] = c

    @classmethod
    def variable(cls, I):
        return cls({((I.elems, 1),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GradedPolynomial) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, Fraction(0)) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return GradedPolynomial(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return GradedPolynomial({m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, m, c=Fraction(1)):
        return GradedPolynomial({mono_mul(t, m): c * v for t, v in self.terms.items()})

    def multidegree(self, d):
        degs = {mono_multidegree(m, d) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not multihomogeneous")
        return degs.pop()

    def canonical(self):
        """Scale so the lexicographically least monomial has coefficient 1."""
        if not self.terms:
            return self
        lead = min(self.terms)
        return self.scale(Fraction(1) / self.terms[lead])

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            parts.append(f"({c})*{mono_str(m)}")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"coeff": str(c), "monomial": [[list(e), x] for e, x in m]}
            for m, c in sorted(self.terms.items())
        ]


def term_product(n, seq1, seq2):
    """Sign-normalized product X_{seq1} X_{seq2} as a polynomial."""
    I1, s1 = normalize_index(n, seq1)
    I2, s2 = normalize_index(n, seq2)
    if s1 == 0 or s2 == 0:
        return GradedPolynomial()
    m = mono_mul(((I1.elems, 1),), ((I2.elems, 1),))
    return GradedPolynomial({m: Fraction(s1 * s2)})


def _exchange_relation(n, i_tuple, j_tuple, k):
    """Single Pluecker exchange: swap the first k entries of j into i in
    all possible ways."""
    rel = term_product(n, i_tuple, j_tuple)
    for positions in combinations(range(len(i_tuple)), k):
        i_new = list(i_tuple)
        for m, pos in enumerate(positions):
            i_new[pos] = j_tuple[m]
        r_tuple = tuple(i_tuple[pos] for pos in positions)
        rel = rel - term_product(n, tuple(i_new), r_tuple + j_tuple[k:])
    return rel


@lru_cache(maxsize=None)
def plucker_relations(n, d):
    """Generating set of the multihomogeneous Pluecker ideal.

    Runs over all size pairs p >= q in d, all exchange lengths k and all
    placements of the exchanged block; duplicates up to scalar are
    dropped and the result is deterministically ordered.
    """
    d = tuple(d)
    seen = set()
    out = []
    for p in d:
        for q in d:
            if p < q:
                continue
            for i_set in combinations(range(1, n + 1), p):
                for j_set in combinations(range(1, n + 1), q):
                    for k in range(1, q + 1):
                        for block in combinations(j_set, k):
                            rest = tuple(v for v in j_set if v not in block)
                            rel = _exchange_relation(n, i_set, block + rest, k)
                            rel = rel.canonical()
                            if not rel:
                                continue
                            key = rel.key()
                            if key not in seen:
                                seen.add(key)
                                out.append(rel)
    out.sort(key=lambda r: r.key())
    return out


def grad_of(m, g):
    """Grading of a monomial: sum of index degrees weighted by exponents."""
    return mono_grade(m, g)


def initial_part(f, g):
    """Sum of the terms of minimal grading (min convention)."""
    if not f:
        raise ValueError("zero polynomial has no initial part")
    lowest = min(mono_grade(m, g) for m in f.terms)
    return GradedPolynomial(
        {m: c for m, c in f.terms.items() if mono_grade(m, g) == lowest}
    )


# -- graded components -------------------------------------------------------


@lru_cache(maxsize=None)
def component_monomials(n, d, mu):
    """Ordered monomial basis of the coordinate-ring component of
    multidegree mu (aligned with d)."""
    factor_lists = []
    for k, count in zip(d, mu):
        variables = [I.elems for I in all_indices(n, k)]
        factor_lists.append(
            [tuple(c) for c in combinations_with_replacement(variables, count)]
        )
    monos = [()]
    for factors in factor_lists:
        monos = [
            mono_mul(m, tuple((e, 1) for e in f)) for m in monos for f in factors
        ]
    seen = {}
    for m in monos:
        seen[m] = True
    return sorted(seen)


def _spanning_rows(gens, n, d, mu):
    """Spanning rows of the ideal component: every generator times every
    monomial of complementary multidegree, as sparse vectors over the
    monomial basis."""
    basis = component_monomials(n, d, mu)
    col = {m: idx for idx, m in enumerate(basis)}
    rows = []
    for g in gens:
        nu = g.multidegree(d)
        rest = tuple(a - b for a, b in zip(mu, nu))
        if any(x < 0 for x in rest):
            continue
        for m in component_monomials(n, d, rest):
            prod = g.mul_monomial(m)
            rows.append({col[t]: c for t, c in prod.terms.items()})
    return basis, rows


@lru_cache(maxsize=None)
def _canonical_rows_cache(n, d, mu):
    return _spanning_rows(plucker_relations(n, d), n, d, mu)


def _ideal_rows(gens, n, d, mu):
    if gens is plucker_relations(n, d):
        return _canonical_rows_cache(n, d, mu)
    return _spanning_rows(gens, n, d, mu)


class ComponentBasis:
    """Row-reduced basis of an ideal component over a fixed monomial list."""

    def __init__(self, mu, monomials, rows):
        self.mu = mu
        self.monomials = monomials  # ordered basis of the ring component
        self.rows = rows  # RREF rows, sparse over column positions

    @property
    def rank(self):
        return len(self.rows)

    def row_polynomials(self):
        return [
            GradedPolynomial({self.monomials[c]: v for c, v in row.items()})
            for row in self.rows
        ]

    def span_key(self):
        return canonical_rows(self.rows)


def component_basis(gens, n, d, mu):
    """Row-reduced basis of the ideal component of multidegree mu."""
    basis, rows = _ideal_rows(gens, n, d, mu)
    ech = Echelon()
    for row in rows:
        ech.insert(row)
    return ComponentBasis(mu, basis, ech.reduced_rows())


def _graded_poskey(basis, grades):
    return lambda c: (grades[c], c)


def initial_component(gens, n, d, mu, g):
    """Basis of the initial-ideal component for grading g.

    Reducing the component with pivots ordered by ascending grade makes
    the initial parts of the echelon rows linearly independent, so they
    span the initial component; a final lex reduction canonicalizes.
    """
    basis, rows = _ideal_rows(gens, n, d, mu)
    grades = [mono_grade(m, g) for m in basis]
    ech = Echelon(_graded_poskey(basis, grades))
    for row in rows:
        ech.insert(row)
    initial_rows = []
    for row in ech.reduced_rows():
        lowest = min(grades[c] for c in row)
        initial_rows.append({c: v for c, v in row.items() if grades[c] == lowest})
    out = Echelon()
    for row in initial_rows:
        out.insert(row)
    return ComponentBasis(mu, basis, out.reduced_rows())


def contains_monomial(cb):
    """A monomial in the row span, if any; in RREF that is a unit row."""
    for row in cb.rows:
        if len(row) == 1:
            (c,) = row
            return cb.monomials[c]
    return None


def is_binomially_spanned(cb):
    return all(len(row) <= 2 for row in cb.rows)


def quadratic_generation_check(A, n, d, mu):
    """Compare the component of the ideal generated by the initial parts
    of the Pluecker relations with the full initial-ideal component."""
    d = tuple(d)
    mu = tuple(mu)
    g = grading_vector(A, d)
    gens = plucker_relations(n, d)
    quad = []
    seen = set()
    for rel in gens:
        init = initial_part(rel, g).canonical()
        if init.key() not in seen:
            seen.add(init.key())
            quad.append(init)
    basis = component_monomials(n, d, mu)
    col = {m: idx for idx, m in enumerate(basis)}
    ech = Echelon()
    for rel in quad:
        nu = rel.multidegree(d)
        rest = tuple(a - b for a, b in zip(mu, nu))
        if any(x < 0 for x in rest):
            continue
        for m in component_monomials(n, d, rest):
            prod = rel.mul_monomial(m)
            ech.insert({col[t]: c for t, c in prod.terms.items()})
    full = initial_component(gens, n, d, mu, g)
    return ech.rank == full.rank


def face_degeneration_check(A, B, n, d, mu):
    """Check that the grading of B degenerates the initial ideal of A into
    the initial ideal of B on the given component.

    Requires the minimal face containing B to contain the minimal face
    containing A.
    """
    d = tuple(d)
    mu = tuple(mu)
    if not face_contains(face_signature(B), face_signature(A)):
        raise ValueError("face precondition fails: B's face must contain A's face")
    gens = plucker_relations(n, d)
    gA = grading_vector(A, d)
    gB = grading_vector(B, d)
    ideal_A = initial_component(gens, n, d, mu, gA)
    basis = ideal_A.monomials
    grades_B = [mono_grade(m, gB) for m in basis]
    ech = Echelon(_graded_poskey(basis, grades_B))
    for row in ideal_A.rows:
        ech.insert(row)
    out = Echelon()
    for row in ech.reduced_rows():
        lowest = min(grades_B[c] for c in row)
        out.insert({c: v for c, v in row.items() if grades_B[c] == lowest})
    lhs = canonical_rows(out.reduced_rows())
    rhs = initial_component(gens, n, d, mu, gB).span_key()
    return lhs == rhs


def classical_component(n, d, mu):
    """Component basis with the zero grading (classical recovery)."""
    gens = plucker_relations(n, tuple(d))
    return initial_component(gens, n, tuple(d), tuple(mu), zero_grading(n, d))


def multidegrees_up_to(d, bound):
    """All nonzero multidegrees over d of total degree <= bound."""
    out = []

    def build(pos, left, acc):
        if pos == len(d):
            if any(acc):
                out.append(tuple(acc))
            return
        for v in range(left + 1):
            build(pos + 1, left - v, acc + [v])

    build(0, bound, [])
    out.sort(key=lambda mu: (sum(mu), mu))
    return out
