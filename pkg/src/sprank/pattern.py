"""Sparsity patterns, bipartite graphs, and degree-based structural predicates.

A sparsity pattern is a 0/* matrix template: *-entries hold arbitrary real
values, 0-entries are identically zero.  Each pattern corresponds one-to-one
to a bipartite graph whose left nodes are rows and right nodes are columns,
with an edge wherever the pattern has a star.

Coordinates are 0-based everywhere inside the library.  The 1-based
convention of the file formats and error messages lives in :mod:`sprank.io`.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .errors import InvalidKError, NotDisjointError, OutOfRangeError, ShapeError


@dataclass(frozen=True)
class SparsityPattern:
    """A 0/* matrix template with n rows, m columns (m >= n), stars 0-based."""

    n: int
    m: int
    stars: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ShapeError(f"pattern dimensions must be positive, got ({self.n}, {self.m})")
        if self.m < self.n:
            raise ShapeError(
                f"m = {self.m} < n = {self.n}; patterns assume at least as many "
                "columns as rows (transpose the input if rows exceed columns)"
            )
        object.__setattr__(self, "stars", frozenset(self.stars))
        for (i, j) in self.stars:
            if not (0 <= i < self.n and 0 <= j < self.m):
                raise OutOfRangeError(
                    f"star ({i + 1}, {j + 1}) outside the {self.n}x{self.m} grid"
                )

    @property
    def sorted_stars(self) -> list[tuple[int, int]]:
        """Stars in canonical row-major order."""
        return sorted(self.stars)

    def dim(self) -> int:
        return len(self.stars)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with left nodes 0..n_left-1 and right nodes 0..n_right-1."""

    n_left: int
    n_right: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_left < 1 or self.n_right < 1:
            raise ShapeError(
                f"node counts must be positive, got ({self.n_left}, {self.n_right})"
            )
        object.__setattr__(self, "edges", frozenset(self.edges))
        for (i, j) in self.edges:
            if not (0 <= i < self.n_left and 0 <= j < self.n_right):
                raise OutOfRangeError(
                    f"edge (a{i + 1}, b{j + 1}) outside graph with "
                    f"{self.n_left} left and {self.n_right} right nodes"
                )

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def left_degrees(self) -> list[int]:
        degs = [0] * self.n_left
        for (i, _) in self.edges:
            degs[i] += 1
        return degs

    def right_degrees(self) -> list[int]:
        degs = [0] * self.n_right
        for (_, j) in self.edges:
            degs[j] += 1
        return degs

    def neighbors(self, left: int) -> list[int]:
        """Right neighbors of a left node, ascending."""
        return sorted(j for (i, j) in self.edges if i == left)


@dataclass(frozen=True)
class Matching:
    """An edge set with pairwise-distinct left and right endpoints."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        lefts = [i for (i, _) in self.edges]
        rights = [j for (_, j) in self.edges]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("matching edges must have pairwise-distinct endpoints")

    def is_left_perfect(self, n_left: int) -> bool:
        return len(self.edges) == n_left

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


class Ordering(enum.Enum):
    """Outcome of comparing two patterns under star-set inclusion."""

    STRICT = "strict"
    EQUAL = "equal"
    REVERSE_STRICT = "reverse-strict"
    INCOMPARABLE = "incomparable"


def pattern_from_stars(n: int, m: int, stars) -> SparsityPattern:
    """Build a validated pattern from 1-based (row, col) coordinates.

    Duplicate coordinates are collapsed with a warning; coordinates outside
    the grid raise OutOfRangeError; m < n raises ShapeError.
    """
    seen = set()
    for (r, c) in stars:
        if not (1 <= r <= n and 1 <= c <= m):
            raise OutOfRangeError(f"star ({r}, {c}) outside the {n}x{m} grid")
        coord = (r - 1, c - 1)
        if coord in seen:
            warnings.warn(f"duplicate star ({r}, {c}) collapsed", stacklevel=2)
        seen.add(coord)
    return SparsityPattern(n, m, frozenset(seen))


def to_bipartite(p: SparsityPattern) -> BipartiteGraph:
    """Reinterpret stars as edges: row i -- column j for each star (i, j)."""
    return BipartiteGraph(p.n, p.m, p.stars)


def from_bipartite(g: BipartiteGraph) -> SparsityPattern:
    """Inverse of :func:`to_bipartite`; requires n_right >= n_left."""
    if g.n_right < g.n_left:
        raise ShapeError(
            f"graph has {g.n_left} left but only {g.n_right} right nodes; "
            "no valid pattern (m >= n required)"
        )
    return SparsityPattern(g.n_left, g.n_right, g.edges)


def degree(g: BipartiteGraph, side: str, index: int) -> int:
    """Number of edges incident to a node; side is 'left' or 'right'."""
    if side == "left":
        if not 0 <= index < g.n_left:
            raise OutOfRangeError(f"left node a{index + 1} out of range")
        return sum(1 for (i, _) in g.edges if i == index)
    if side == "right":
        if not 0 <= index < g.n_right:
            raise OutOfRangeError(f"right node b{index + 1} out of range")
        return sum(1 for (_, j) in g.edges if j == index)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_union_of_k_matchings(g: BipartiteGraph, k: int) -> bool:
    """True iff g is a union of k disjoint left-perfect matchings.

    Equivalent degree test: every left degree equals k and every right
    degree is at most k.
    """
    if not 1 <= k <= g.n_right:
        raise InvalidKError(f"k = {k} outside [1, {g.n_right}]")
    return all(d == k for d in g.left_degrees()) and all(
        d <= k for d in g.right_degrees()
    )


def complement(g: BipartiteGraph) -> BipartiteGraph:
    """Complement within the complete bipartite graph on the same node sets."""
    missing = {
        (i, j)
        for i in range(g.n_left)
        for j in range(g.n_right)
        if (i, j) not in g.edges
    }
    return BipartiteGraph(g.n_left, g.n_right, frozenset(missing))


def union_disjoint(g1: BipartiteGraph, g2: BipartiteGraph) -> BipartiteGraph:
    """Union of two edge-disjoint graphs on identical node sets."""
    if (g1.n_left, g1.n_right) != (g2.n_left, g2.n_right):
        raise ShapeError(
            f"node sets differ: ({g1.n_left}, {g1.n_right}) vs "
            f"({g2.n_left}, {g2.n_right})"
        )
    shared = g1.edges & g2.edges
    if shared:
        raise NotDisjointError(shared)
    return BipartiteGraph(g1.n_left, g1.n_right, g1.edges | g2.edges)


def complete_graph(n_left: int, n_right: int) -> BipartiteGraph:
    """The complete bipartite graph K(n_left, n_right)."""
    return BipartiteGraph(
        n_left,
        n_right,
        frozenset((i, j) for i in range(n_left) for j in range(n_right)),
    )


def precedes(p1: SparsityPattern, p2: SparsityPattern) -> Ordering:
    """Classify p1 vs p2 under star-set inclusion (same dimensions only)."""
    if (p1.n, p1.m) != (p2.n, p2.m):
        raise ShapeError(
            f"cannot compare patterns of shapes ({p1.n}, {p1.m}) and ({p2.n}, {p2.m})"
        )
    if p1.stars == p2.stars:
        return Ordering.EQUAL
    if p1.stars < p2.stars:
        return Ordering.STRICT
    if p1.stars > p2.stars:
        return Ordering.REVERSE_STRICT
    return Ordering.INCOMPARABLE
