"""Weight systems and the polyhedral cone of admissible degenerations.

A weight system assigns an integer a_{i,j} to every pair 1 <= i < j <= n.
The admissible cone is cut out by

    (a)  a_{i,i+1} + a_{i+1,i+2} >= a_{i,i+2}          for 1 <= i <= n-2,
    (b)  a_{i,j} + a_{i+1,j+1} >= a_{i,j+1} + a_{i+1,j} for 1 <= i < j-1 <= n-2.

Which of these hold with equality determines the minimal face containing
the system; everything downstream (module structures, initial ideals)
only depends on that face.
"""

import json
import random
from dataclasses import dataclass


def triangle_pairs(n):
    """All pairs (i, j) with 1 <= i < j <= n, in lexicographic order."""
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


class NotInConeError(ValueError):
    """Raised when an operation requires an admissible weight system."""


@dataclass(frozen=True)
class WeightSystem:
    """Integer triangle a_{i,j}, 1 <= i < j <= n."""

    n: int
    entries: tuple  # aligned with triangle_pairs(n)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if len(self.entries) != self.n * (self.n - 1) // 2:
            raise ValueError("wrong number of triangle entries")
        if not all(isinstance(v, int) for v in self.entries):
            raise ValueError("weight entries must be integers")

    @classmethod
    def from_map(cls, n, a):
        pairs = triangle_pairs(n)
        missing = [p for p in pairs if p not in a]
        if missing:
            raise ValueError(f"missing entries {missing}")
        return cls(n, tuple(a[p] for p in pairs))

    @classmethod
    def from_function(cls, n, func):
        return cls(n, tuple(func(i, j) for i, j in triangle_pairs(n)))

    def a(self, i, j):
        if not 1 <= i < j <= self.n:
            raise KeyError((i, j))
        # offset of row i block, then j within it
        base = sum(self.n - t for t in range(1, i))
        return self.entries[base + (j - i - 1)]

    def as_map(self):
        return dict(zip(triangle_pairs(self.n), self.entries))

    def to_json(self):
        return {
            "n": self.n,
            "a": {f"{i},{j}": self.a(i, j) for i, j in triangle_pairs(self.n)},
        }

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        a = {}
        for key, val in data["a"].items():
            i, j = (int(t) for t in key.split(","))
            a[(i, j)] = int(val)
        return cls.from_map(n, a)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_text(self):
        """Triangle rendering with one row per difference j - i."""
        lines = []
        for diff in range(1, self.n):
            row = [self.a(i, i + diff) for i in range(1, self.n - diff + 1)]
            lines.append(" " * (2 * (diff - 1)) + "   ".join(str(v) for v in row))
        return "\n".join(lines)


def zero_weight_system(n):
    return WeightSystem.from_function(n, lambda i, j: 0)


def abelian_weight_system(n):
    return WeightSystem.from_function(n, lambda i, j: 1)


def toric_weight_system(n):
    return WeightSystem.from_function(n, lambda i, j: (j - i + 1) * (n - j))


def ineq_a_indices(n):
    return list(range(1, n - 1))


def ineq_b_indices(n):
    return [(i, j) for i in range(1, n - 1) for j in range(i + 2, n)]


def _slack_a(A, i):
    return A.a(i, i + 1) + A.a(i + 1, i + 2) - A.a(i, i + 2)


def _slack_b(A, i, j):
    return A.a(i, j) + A.a(i + 1, j + 1) - A.a(i, j + 1) - A.a(i + 1, j)


def check_cone_membership(A):
    """True iff every defining inequality (a), (b) holds."""
    if any(_slack_a(A, i) < 0 for i in ineq_a_indices(A.n)):
        return False
    return all(_slack_b(A, i, j) >= 0 for i, j in ineq_b_indices(A.n))


def derived_inequalities_hold(A):
    """Check the derived triangle and quadrangle inequalities.

    (A)  a_{i,j} + a_{j,k} >= a_{i,k}           for i < j < k,
    (B)  a_{i,j} + a_{k,l} >= a_{i,l} + a_{k,j} for i < k < j < l.

    Every admissible weight system satisfies these, each being a sum of
    defining inequalities.
    """
    n = A.n
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            for k in range(j + 1, n + 1):
                if A.a(i, j) + A.a(j, k) < A.a(i, k):
                    return False
    for i in range(1, n):
        for k in range(i + 1, n):
            for j in range(k + 1, n):
                for l in range(j + 1, n + 1):
                    if A.a(i, j) + A.a(k, l) < A.a(i, l) + A.a(k, j):
                        return False
    return True


@dataclass(frozen=True)
class FaceSignature:
    """Which defining inequalities are tight; encodes the minimal face."""

    n: int
    tight_a: frozenset
    tight_b: frozenset


def face_signature(A):
    if not check_cone_membership(A):
        raise NotInConeError("weight system outside the admissible cone")
    tight_a = frozenset(i for i in ineq_a_indices(A.n) if _slack_a(A, i) == 0)
    tight_b = frozenset(p for p in ineq_b_indices(A.n) if _slack_b(A, *p) == 0)
    return FaceSignature(A.n, tight_a, tight_b)


def is_interior(A):
    sig = face_signature(A)
    return not sig.tight_a and not sig.tight_b


def face_contains(sig_outer, sig_inner):
    """True iff the face of sig_outer contains the face of sig_inner.

    Larger faces are tight on fewer inequalities, so containment is
    inclusion of tight sets.
    """
    if sig_outer.n != sig_inner.n:
        raise ValueError("signatures for different n")
    return (
        sig_outer.tight_a <= sig_inner.tight_a
        and sig_outer.tight_b <= sig_inner.tight_b
    )


def _pbw_locus_representative(n, tight):
    """A weight system with all (b) tight and (a) tight exactly on ``tight``.

    With every (b) an equality one has a_{i,j} = u_i (column independent);
    inequality (a) at position i then reads u_{i+1} >= 0 and is tight iff
    u_{i+1} = 0.
    """
    u = {1: 1}
    for m in range(2, n):
        u[m] = 0 if (m - 1) in tight else 1
    return WeightSystem.from_function(n, lambda i, j: u[i])


def canonical_weight_systems(n):
    """Labeled reference systems: classical, abelian, toric and the
    2^(n-2) representatives of the subfaces where all (b) are tight."""
    out = [
        ("classical", zero_weight_system(n)),
        ("abelian", abelian_weight_system(n)),
        ("toric", toric_weight_system(n)),
    ]
    positions = ineq_a_indices(n)
    subsets = [[]]
    for i in positions:
        subsets += [s + [i] for s in subsets]
    for subset in sorted(subsets, key=lambda s: (len(s), s)):
        tight = frozenset(subset)
        A = _pbw_locus_representative(n, tight)
        sig = face_signature(A)
        assert sig.tight_a == tight and sig.tight_b == frozenset(ineq_b_indices(n))
        label = "pbw-locus-" + ("".join(str(i) for i in sorted(tight)) or "none")
        out.append((label, A))
    return out


def random_cone_points(n, count, bound=3, seed=0):
    """Rejection-sample admissible integer triangles with entries in
    [-bound, bound]."""
    rng = random.Random(seed)
    pairs = triangle_pairs(n)
    found = []
    while len(found) < count:
        A = WeightSystem(n, tuple(rng.randint(-bound, bound) for _ in pairs))
        if check_cone_membership(A):
            found.append(A)
    return found
