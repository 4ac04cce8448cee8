"""PBW Young tableaux, their semistandard subclass and the pattern bijection.

A column of height h places every entry <= h on its own row; the larger
entries occupy the free rows in decreasing order from the top. Such a
column is determined by its content set, so enumeration works over
content sets with an adjacency condition between neighboring columns.
The maps ``tau`` and ``zeta`` translate between tableaux and triangle
patterns; ``zeta`` peels off the maximal support antichain one column at
a time.
"""

from dataclasses import dataclass
from itertools import combinations

from .fflv import DominantWeight, TrianglePattern, is_fflv_pattern


@dataclass(frozen=True)
class PBWTableau:
    """Filling of the Young diagram of a dominant weight, by columns.

    ``columns`` lists entries top to bottom; heights are non-increasing
    left to right.
    """

    n: int
    columns: tuple  # tuple of tuples

    def __post_init__(self):
        heights = [len(c) for c in self.columns]
        if any(h2 > h1 for h1, h2 in zip(heights, heights[1:])):
            raise ValueError("column heights must be non-increasing")
        if any(h == 0 or h > self.n - 1 for h in heights):
            raise ValueError("column heights must lie in [1, n-1]")
        for col in self.columns:
            if any(not 1 <= v <= self.n for v in col):
                raise ValueError("entries out of range")

    def shape(self):
        coeffs = [0] * (self.n - 1)
        for col in self.columns:
            coeffs[len(col) - 1] += 1
        return DominantWeight(self.n, tuple(coeffs))

    def to_json(self):
        return {"n": self.n, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n"]), tuple(tuple(c) for c in data["columns"]))


def empty_tableau(n):
    return PBWTableau(n, ())


def pbw_column(n, content):
    """The unique PBW arrangement of a content set: small entries sit on
    their own row, large entries fill the free rows in decreasing order."""
    content = sorted(set(content))
    h = len(content)
    col = [None] * h
    for v in content:
        if v <= h:
            col[v - 1] = v
    big = sorted((v for v in content if v > h), reverse=True)
    free = iter(i for i in range(h) if col[i] is None)
    for v in big:
        col[next(free)] = v
    return tuple(col)


def column_content(col):
    return frozenset(col)


def _column_is_pbw(col):
    h = len(col)
    if len(set(col)) != h:
        return False  # condition (1)
    for i, v in enumerate(col, start=1):
        if v <= h and v != i:
            return False  # condition (2)
    big = [v for v in col if v > h]
    if big != sorted(big, reverse=True):
        return False  # condition (3)
    return True


def is_pbw_tableau(Y):
    return all(_column_is_pbw(col) for col in Y.columns)


def _adjacent_ok(left, right):
    """Condition (4) between two neighboring columns."""
    for i, v in enumerate(right, start=1):
        if not any(left[k] >= v for k in range(i - 1, len(left))):
            return False
    return True


def is_pbw_ssyt(Y):
    if not is_pbw_tableau(Y):
        return False
    return all(
        _adjacent_ok(a, b) for a, b in zip(Y.columns, Y.columns[1:])
    )


def order_preceq(x, y, n):
    """Two-column order: x precedes y iff |x| >= |y| and the two-column
    tableau (x | y) is PBW semistandard."""
    x, y = frozenset(x), frozenset(y)
    for s in (x, y):
        if not s or len(s) >= n or any(not 1 <= v <= n for v in s):
            raise ValueError("arguments must be proper nonempty subsets of [1, n]")
    if len(x) < len(y):
        return False
    return _adjacent_ok(pbw_column(n, x), pbw_column(n, y))


def _column_heights(lam):
    heights = []
    for i in range(lam.n - 1, 0, -1):
        heights.extend([i] * lam.a(i))
    return heights


def enumerate_ssyt(lam):
    """All PBW semistandard tableaux of the given shape, depth first over
    column content sets in sorted order."""
    n = lam.n
    heights = _column_heights(lam)
    if not heights:
        return [empty_tableau(n)]
    contents = {
        h: [c for c in combinations(range(1, n + 1), h)] for h in set(heights)
    }
    out = []
    cols = []

    def extend(depth):
        if depth == len(heights):
            out.append(PBWTableau(n, tuple(cols)))
            return
        for content in contents[heights[depth]]:
            col = pbw_column(n, content)
            if cols and not _adjacent_ok(cols[-1], col):
                continue
            cols.append(col)
            extend(depth + 1)
            cols.pop()

    extend(0)
    return out


def tau(Y):
    """Triangle pattern of a PBW tableau: one per column entry sitting
    below its own row, summed over columns."""
    if not is_pbw_tableau(Y):
        raise ValueError("not a PBW tableau")
    T = TrianglePattern.zero(Y.n)
    for col in Y.columns:
        marks = {}
        for i, v in enumerate(col, start=1):
            if v > i:
                marks[(i, v)] = 1
        T = T + TrianglePattern.from_map(Y.n, marks)
    return T


def _maximal_cells(support):
    return [
        c
        for c in support
        if not any(d != c and d[0] >= c[0] and d[1] >= c[1] for d in support)
    ]


def zeta(T, lam):
    """Greedy inverse of tau: repeatedly extract the pattern supported on
    the maximal cells fitting the current column height."""
    if T.n != lam.n:
        raise ValueError("mismatched n")
    if not is_fflv_pattern(T, lam):
        raise ValueError("pattern outside the polytope of the given weight")
    n = T.n
    residual = dict(T.as_map())
    columns = []
    for h in _column_heights(lam):
        support = [c for c, v in residual.items() if v > 0]
        cells = [
            (i, j)
            for i, j in _maximal_cells(support)
            if i <= h and j >= h + 1
        ]
        content = set(range(1, h + 1))
        for i, j in cells:
            content.discard(i)
            content.add(j)
            residual[(i, j)] -= 1
        columns.append(pbw_column(n, content))
    if any(v for v in residual.values()):
        raise ValueError("pattern decomposition left a nonzero residual")
    Y = PBWTableau(n, tuple(columns))
    assert is_pbw_ssyt(Y)
    return Y
