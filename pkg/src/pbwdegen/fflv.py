"""Dyck paths, FFLV patterns and the polytope of a dominant weight.

Number triangles T_{i,j} (1 <= i < j <= n) are constrained along Dyck
paths: for each path the sum of the visited entries may not exceed the
sum a_{i_1} + ... + a_{i_N} of weight coefficients between the endpoint
rows. The integer points of this polytope count the dimension of the
irreducible module, which the Weyl dimension formula provides as an
independent oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .weights import triangle_pairs


@dataclass(frozen=True)
class DominantWeight:
    """Nonnegative coefficients (a_1, ..., a_{n-1}) on fundamental weights."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n - 1:
            raise ValueError("need n-1 coefficients")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")

    @classmethod
    def fundamental(cls, n, k):
        return cls(n, tuple(1 if t == k else 0 for t in range(1, n)))

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (n - 1))

    def a(self, i):
        return self.coeffs[i - 1]

    def column_sizes(self):
        """Sorted set of i with a_i > 0."""
        return tuple(i for i in range(1, self.n) if self.a(i) > 0)

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mismatched n")
        return DominantWeight(self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def total(self):
        return sum(self.coeffs)


@dataclass(frozen=True)
class TrianglePattern:
    """Nonnegative integer triangle T_{i,j}, stored in pair order."""

    n: int
    entries: tuple  # aligned with triangle_pairs(n)

    def __post_init__(self):
        if len(self.entries) != self.n * (self.n - 1) // 2:
            raise ValueError("wrong number of triangle entries")
        if any(v < 0 for v in self.entries):
            raise ValueError("entries must be nonnegative")

    @classmethod
    def from_map(cls, n, t):
        return cls(n, tuple(t.get(p, 0) for p in triangle_pairs(n)))

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (n * (n - 1) // 2))

    def value(self, i, j):
        base = sum(self.n - t for t in range(1, i))
        return self.entries[base + (j - i - 1)]

    def as_map(self):
        return dict(zip(triangle_pairs(self.n), self.entries))

    def support(self):
        return [p for p, v in zip(triangle_pairs(self.n), self.entries) if v]

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mismatched n")
        return TrianglePattern(self.n, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def to_json(self):
        return {
            "n": self.n,
            "t": {f"{i},{j}": v for (i, j), v in self.as_map().items() if v},
        }


@dataclass(frozen=True)
class DyckPath:
    steps: tuple  # sequence of pairs (i, j)

    def __post_init__(self):
        steps = self.steps
        if not steps:
            raise ValueError("empty path")
        if steps[0][1] - steps[0][0] != 1 or steps[-1][1] - steps[-1][0] != 1:
            raise ValueError("path must start and end in the top row")
        for (i, j), (i2, j2) in zip(steps, steps[1:]):
            if (i2, j2) not in ((i + 1, j), (i, j + 1)):
                raise ValueError("invalid step")

    @property
    def start_row(self):
        return self.steps[0][0]

    @property
    def end_row(self):
        return self.steps[-1][0]


@lru_cache(maxsize=None)
def dyck_paths(n):
    """All Dyck paths for a given n, lexicographically ordered."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = []

    def extend(path):
        i, j = path[-1]
        if j - i == 1:
            out.append(DyckPath(tuple(path)))
        for nxt in ((i + 1, j), (i, j + 1)):
            if nxt[0] < nxt[1] and nxt[1] <= n:
                path.append(nxt)
                extend(path)
                path.pop()

    for start in range(1, n):
        extend([(start, start + 1)])
    out.sort(key=lambda p: p.steps)
    return out


def path_bound(lam, path):
    """Upper bound a_{i_1} + ... + a_{i_N} for the path under weight lam."""
    return sum(lam.a(i) for i in range(path.start_row, path.end_row + 1))


def path_sum(T, path):
    return sum(T.value(i, j) for i, j in path.steps)


def is_fflv_pattern(T, lam):
    if T.n != lam.n:
        raise ValueError("mismatched n")
    return all(path_sum(T, p) <= path_bound(lam, p) for p in dyck_paths(lam.n))


def cell_bound(lam, i, j):
    """Bound on T_{i,j} from the hook path through the single cell (i, j)."""
    return sum(lam.a(t) for t in range(i, j))


def enumerate_patterns(lam):
    """All integer points of the FFLV polytope, in lexicographic order.

    Backtracks over cells in pair order, pruning with partial Dyck path
    sums; the per-cell hook bound keeps the search finite.
    """
    n = lam.n
    pairs = triangle_pairs(n)
    paths = dyck_paths(n)
    bounds = [path_bound(lam, p) for p in paths]
    cell_paths = {pair: [] for pair in pairs}
    for idx, p in enumerate(paths):
        for step in p.steps:
            cell_paths[step].append(idx)
    maxima = [cell_bound(lam, i, j) for i, j in pairs]
    sums = [0] * len(paths)
    values = [0] * len(pairs)
    out = []

    def assign(pos):
        if pos == len(pairs):
            out.append(TrianglePattern(n, tuple(values)))
            return
        pair = pairs[pos]
        for v in range(maxima[pos] + 1):
            values[pos] = v
            ok = True
            for idx in cell_paths[pair]:
                sums[idx] += v
                if sums[idx] > bounds[idx]:
                    ok = False
            if ok:
                assign(pos + 1)
            for idx in cell_paths[pair]:
                sums[idx] -= v
            if not ok:
                break
        values[pos] = 0

    assign(0)
    return out


def weyl_dim(lam):
    """Dimension of the irreducible sl_n module by the product formula."""
    dim = Fraction(1)
    for i, j in triangle_pairs(lam.n):
        dim *= Fraction(sum(lam.a(t) + 1 for t in range(i, j)), j - i)
    assert dim.denominator == 1
    return int(dim)


def minkowski_check(lam, mu):
    """True iff the pattern sets satisfy the Minkowski sum property."""
    if lam.n != mu.n:
        raise ValueError("mismatched n")
    left = {T.entries for T in enumerate_patterns(lam)}
    right = {T.entries for T in enumerate_patterns(mu)}
    sums = {tuple(x + y for x, y in zip(a, b)) for a in left for b in right}
    target = {T.entries for T in enumerate_patterns(lam + mu)}
    return sums == target
