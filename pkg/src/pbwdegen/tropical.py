"""The degree map into tropical coordinates and its explicit maximal cone.

A tropical point assigns a rational degree to every proper nonempty
subset of [1, n]. The linear map from weight triangles sends a system to
the degrees of all Pluecker coordinates; its image is cut out by the
linear conditions [i]-[iii] and, inside that subspace, by the
inequalities [iv] and [v]. Violating an inequality produces a witness
relation whose initial part is a single monomial, certifying that the
point leaves the tropical variety.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .degrees import GradingVector, PlueckerIndex, degree_s
from .ideals import (
    GradedPolynomial,
    contains_monomial,
    initial_component,
    multidegrees_up_to,
    plucker_relations,
)
from .linalg import Echelon
from .weights import triangle_pairs


def proper_subsets(n):
    out = []
    for k in range(1, n):
        out.extend(combinations(range(1, n + 1), k))
    return out


@dataclass(frozen=True)
class TropicalPoint:
    """Rational coordinates over all proper nonempty subsets of [1, n]."""

    n: int
    s: dict

    def __post_init__(self):
        expected = proper_subsets(self.n)
        if set(self.s) != set(expected):
            raise ValueError("need one coordinate per proper nonempty subset")
        object.__setattr__(
            self, "s", {k: Fraction(v) for k, v in self.s.items()}
        )

    def value(self, elems):
        return self.s[tuple(elems)]

    def to_json(self):
        out = {}
        for elems in proper_subsets(self.n):
            v = self.s[elems]
            key = ",".join(str(x) for x in elems)
            out[key] = int(v) if v.denominator == 1 else str(v)
        return {"n": self.n, "s": out}

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        s = {}
        for key, val in data["s"].items():
            elems = tuple(int(t) for t in key.split(","))
            s[elems] = Fraction(val)
        return cls(n, s)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _complement_pairs_raw(n, elems):
    k = len(elems)
    base = set(range(1, k + 1))
    s = set(elems)
    ps = sorted(base - s)
    qs = sorted(s - base, reverse=True)
    return list(zip(ps, qs))


def point_from_triangle(n, values):
    """Point with s_I summing the given pair values over the complement
    pairs of I. No cone requirement; violating triangles give points
    satisfying [i]-[iii] but possibly not [iv]/[v]."""
    s = {}
    for elems in proper_subsets(n):
        s[elems] = sum(
            (Fraction(values[pq]) for pq in _complement_pairs_raw(n, elems)),
            Fraction(0),
        )
    return TropicalPoint(n, s)


def map_h(A):
    """Degrees of all Pluecker coordinates of an admissible weight system."""
    n = A.n
    s = {}
    for elems in proper_subsets(n):
        s[elems] = Fraction(degree_s(A, PlueckerIndex(n, elems)))
    return TropicalPoint(n, s)


def normalize(point):
    """Shift each cardinality so that the leading subsets (1..k) sit at 0."""
    shifts = {k: point.s[tuple(range(1, k + 1))] for k in range(1, point.n)}
    return TropicalPoint(
        point.n, {elems: v - shifts[len(elems)] for elems, v in point.s.items()}
    )


def _prefix(m):
    return tuple(range(1, m + 1))


def cone_C_membership(point):
    """Evaluate the cone conditions [i]-[v]; returns (verdict, violations).

    The point is normalized first, so [i] holds by construction and the
    other conditions are evaluated on the normalized representative.
    """
    n = point.n
    point = normalize(point)
    violations = []
    for k in range(1, n):
        if point.s[_prefix(k)] != 0:
            violations.append(f"[i] k={k}")
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            idxs = [
                _prefix(i - 1) + tuple(range(i + 1, k + 1)) + (j,)
                for k in range(i, j)
            ]
            vals = {point.s[idx] for idx in idxs}
            if len(vals) > 1:
                violations.append(f"[ii] i={i} j={j}")
    for elems in proper_subsets(n):
        pairs = _complement_pairs_raw(n, elems)
        total = sum(
            (point.s[_prefix(p - 1) + (q,)] for p, q in pairs), Fraction(0)
        )
        if point.s[elems] != total:
            violations.append(f"[iii] I={','.join(map(str, elems))}")
    for i in range(1, n - 1):
        lhs = point.s[_prefix(i - 1) + (i + 1,)] + point.s[_prefix(i) + (i + 2,)]
        if lhs < point.s[_prefix(i - 1) + (i + 2,)]:
            violations.append(f"[iv] i={i}")
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            lhs = point.s[_prefix(i - 1) + (j,)] + point.s[_prefix(i) + (j + 1,)]
            rhs = point.s[_prefix(i - 1) + (j + 1,)] + point.s[_prefix(i) + (j,)]
            if lhs < rhs:
                violations.append(f"[v] i={i} j={j}")
    return not violations, violations


def grading_from_point(point, d):
    s = {}
    for k in d:
        for elems in combinations(range(1, point.n + 1), k):
            s[PlueckerIndex(point.n, elems)] = point.s[elems]
    return GradingVector(point.n, tuple(d), s)


def in_trop_necessary_check(point, d, degree_bound):
    """Necessary tropical-membership test: no initial-ideal component of
    total degree up to the bound contains a monomial.

    Bounded-degree only; a True verdict certifies nothing beyond the
    inspected degrees.
    """
    n = point.n
    d = tuple(d)
    g = grading_from_point(point, d)
    gens = plucker_relations(n, d)
    for mu in multidegrees_up_to(d, degree_bound):
        if sum(mu) < 2:
            continue
        cb = initial_component(gens, n, d, mu, g)
        if contains_monomial(cb) is not None:
            return False
    return True


def _quad(plus, minus1, minus2):
    terms = {}
    for sign, (a, b) in ((1, plus), (-1, minus1), (-1, minus2)):
        mono = tuple(sorted(((tuple(a), 1), (tuple(b), 1))))
        if a == b:
            mono = ((tuple(a), 2),)
        terms[mono] = terms.get(mono, 0) + sign
    return GradedPolynomial({m: Fraction(c) for m, c in terms.items()})


def maximality_witness(point):
    """For a point failing [iv] or [v], the Pluecker relation whose
    initial part degenerates to a single monomial; None when no
    inequality fails."""
    n = point.n
    point = normalize(point)
    ok, violations = cone_C_membership(point)
    linear = [v for v in violations if v.startswith(("[i]", "[ii]", "[iii]"))]
    if linear:
        raise ValueError(f"conditions [i]-[iii] must hold first: {linear}")
    for i in range(1, n - 1):
        lhs = point.s[_prefix(i - 1) + (i + 1,)] + point.s[_prefix(i) + (i + 2,)]
        if lhs < point.s[_prefix(i - 1) + (i + 2,)]:
            return _quad(
                (_prefix(i) + (i + 2,), _prefix(i - 1) + (i + 1,)),
                (_prefix(i) + (i + 1,), _prefix(i - 1) + (i + 2,)),
                (_prefix(i - 1) + (i + 1, i + 2), _prefix(i)),
            )
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            lhs = point.s[_prefix(i - 1) + (j,)] + point.s[_prefix(i) + (j + 1,)]
            rhs = point.s[_prefix(i - 1) + (j + 1,)] + point.s[_prefix(i) + (j,)]
            if lhs < rhs:
                return _quad(
                    (_prefix(i - 1) + (i + 1, j), _prefix(i) + (j + 1,)),
                    (_prefix(i - 1) + (i + 1, j + 1), _prefix(i) + (j,)),
                    (_prefix(i - 1) + (j, j + 1), _prefix(i) + (i + 1,)),
                )
    return None


def h_image_rank(n):
    """Rank of the degree map over the basis of weight triangles."""
    coords = proper_subsets(n)
    pos = {elems: idx for idx, elems in enumerate(coords)}
    ech = Echelon()
    for pair in triangle_pairs(n):
        vec = {}
        for elems in coords:
            count = sum(1 for pq in _complement_pairs_raw(n, elems) if pq == pair)
            if count:
                vec[pos[elems]] = Fraction(count)
        ech.insert(vec)
    return ech.rank
