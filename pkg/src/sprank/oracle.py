"""Brute-force ground truth for rank, resilience, and augmentation.

Everything in this module works straight from the definitions: matchings by
backtracking, resilience by subset enumeration, augmentation by trying
complement subsets in increasing size.  It is deliberately independent of
the flow-based algorithms so the two routes can check each other.

All searches are budget-bounded by counting work units (subset tests or
enumerated matchings), never wall-clock, so budget failures are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetExceededError
from .pattern import BipartiteGraph


@dataclass(frozen=True)
class OracleBudget:
    """Work caps for the exhaustive searches."""

    max_subsets: int = 10**6
    max_matchings: int = 10**5

    def __post_init__(self):
        if self.max_subsets <= 0 or self.max_matchings <= 0:
            raise ValueError("budget values must be positive")


DEFAULT_BUDGET = OracleBudget()


def _adjacency(g: BipartiteGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n_left)]
    for (i, j) in sorted(g.edges):
        adj[i].append(j)
    return adj


def _max_matching_size(g: BipartiteGraph) -> int:
    """Maximum matching cardinality by exhaustive augmenting search."""
    adj = _adjacency(g)

    def best_from(i: int, used: frozenset[int]) -> int:
        if i == g.n_left:
            return 0
        score = best_from(i + 1, used)  # leave row i unmatched
        for j in adj[i]:
            if j not in used:
                score = max(score, 1 + best_from(i + 1, used | {j}))
        return score

    return best_from(0, frozenset())


def _has_left_perfect_matching(g: BipartiteGraph) -> bool:
    adj = _adjacency(g)

    def extend(i: int, used: frozenset[int]) -> bool:
        if i == g.n_left:
            return True
        return any(extend(i + 1, used | {j}) for j in adj[i] if j not in used)

    return extend(0, frozenset())


def _numeric_rank(matrix: np.ndarray, tol: float = 1e-9) -> int:
    """Rank by floating row reduction with partial pivoting."""
    a = matrix.astype(float).copy()
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = rank + int(np.argmax(np.abs(a[rank:, col])))
        if abs(a[pivot, col]) < tol:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] /= a[rank, col]
        for r in range(rows):
            if r != rank:
                a[r] -= a[r, col] * a[rank]
        rank += 1
    return rank


def brute_rank(g: BipartiteGraph, rng: np.random.Generator | None = None) -> int:
    """Maximum matching size, cross-checked against numeric generic rank.

    Fills the stars of three random realizations with values in [1, 2] and
    asserts the row-reduction rank agrees with the matching count.
    """
    size = _max_matching_size(g)
    rng = rng if rng is not None else np.random.default_rng(20240817)
    for _ in range(3):
        a = np.zeros((g.n_left, g.n_right))
        for (i, j) in g.edges:
            a[i, j] = rng.uniform(1.0, 2.0)
        numeric = _numeric_rank(a)
        assert numeric == size, (
            f"generic rank {numeric} disagrees with matching size {size}"
        )
    return size


def enumerate_left_perfect_matchings(
    g: BipartiteGraph, cap: int | None = None
) -> list[frozenset[tuple[int, int]]]:
    """All left-perfect matchings, rows matched in index order."""
    adj = _adjacency(g)
    found: list[frozenset[tuple[int, int]]] = []

    def extend(i: int, used: frozenset[int], picked: list[tuple[int, int]]):
        if cap is not None and len(found) > cap:
            return
        if i == g.n_left:
            found.append(frozenset(picked))
            return
        for j in adj[i]:
            if j not in used:
                picked.append((i, j))
                extend(i + 1, used | {j}, picked)
                picked.pop()

    extend(0, frozenset(), [])
    if cap is not None and len(found) > cap:
        raise BudgetExceededError(f"more than {cap} left-perfect matchings")
    return found


def brute_weak_resilience(
    g: BipartiteGraph, b: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Exact weak resilience by testing every removal subset."""
    if _max_matching_size(g) < g.n_left:
        return -1
    edges = g.sorted_edges
    remaining = b.max_subsets
    verified = 0
    for size in range(1, len(edges) + 1):
        for removed in combinations(edges, size):
            if remaining <= 0:
                raise BudgetExceededError(
                    f"subset budget exhausted; >= {verified} certified",
                    lower_bound=verified,
                )
            remaining -= 1
            reduced = BipartiteGraph(g.n_left, g.n_right, g.edges - set(removed))
            if not _has_left_perfect_matching(reduced):
                return size - 1
        verified = size
    return len(edges) - 1


def _max_disjoint_family(
    matchings: list[frozenset[tuple[int, int]]]
) -> int:
    """Largest pairwise-disjoint subfamily, by DFS with count pruning."""
    total = len(matchings)
    best = 0

    def extend(start: int, chosen_union: frozenset, count: int):
        nonlocal best
        best = max(best, count)
        if count + (total - start) <= best:
            return
        for idx in range(start, total):
            if not (matchings[idx] & chosen_union):
                extend(idx + 1, chosen_union | matchings[idx], count + 1)

    extend(0, frozenset(), 0)
    return best


def brute_strong_resilience(
    g: BipartiteGraph, b: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Exact strong resilience: max disjoint family of left-perfect matchings, minus one."""
    matchings = enumerate_left_perfect_matchings(g, cap=b.max_matchings)
    if not matchings:
        return -1
    return _max_disjoint_family(matchings) - 1


def has_disjoint_matchings(g: BipartiteGraph, k: int, cap: int | None = None) -> bool:
    """Early-exit test for k pairwise-disjoint left-perfect matchings."""
    if k <= 0:
        return True
    matchings = enumerate_left_perfect_matchings(g, cap=cap)

    def extend(start: int, chosen_union: frozenset, count: int) -> bool:
        if count == k:
            return True
        if count + (len(matchings) - start) < k:
            return False
        for idx in range(start, len(matchings)):
            if not (matchings[idx] & chosen_union):
                if extend(idx + 1, chosen_union | matchings[idx], count + 1):
                    return True
        return False

    return extend(0, frozenset(), 0)


def brute_min_augmentation(
    g: BipartiteGraph, k_star: int, b: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Smallest complement subset whose addition gives strong resilience >= k*."""
    comp = sorted(
        (i, j)
        for i in range(g.n_left)
        for j in range(g.n_right)
        if (i, j) not in g.edges
    )
    # Every row needs degree >= k*+1 in the augmented graph, which bounds
    # the answer below without any enumeration.
    left_degs = g.left_degrees()
    min_d = sum(max(0, (k_star + 1) - d) for d in left_degs)
    remaining = b.max_subsets
    for d in range(min_d, len(comp) + 1):
        for extra in combinations(comp, d):
            if remaining <= 0:
                raise BudgetExceededError(
                    f"subset budget exhausted before size {d}", lower_bound=d
                )
            remaining -= 1
            candidate = BipartiteGraph(g.n_left, g.n_right, g.edges | set(extra))
            if has_disjoint_matchings(candidate, k_star + 1, cap=b.max_matchings):
                return d
    raise AssertionError("complete graph always reaches the target")


def find_weak_gt_strong_witness(
    n: int, m: int, b: OracleBudget = DEFAULT_BUDGET
) -> BipartiteGraph | None:
    """Search for a graph whose weak resilience exceeds its strong resilience.

    Scans graphs in increasing edge count, so the first hit is minimal.
    Returns None when the whole space is exhausted without a gap.
    """
    all_edges = [(i, j) for i in range(n) for j in range(m)]
    remaining = b.max_subsets
    # A gap needs weak resilience >= 1, hence every row degree >= 2.
    for count in range(2 * n, len(all_edges) + 1):
        for chosen in combinations(all_edges, count):
            if remaining <= 0:
                raise BudgetExceededError("graph enumeration budget exhausted")
            remaining -= 1
            g = BipartiteGraph(n, m, frozenset(chosen))
            if min(g.left_degrees()) < 2:
                continue
            strong = brute_strong_resilience(g, b)
            if strong < 0:
                continue
            weak = brute_weak_resilience(g, b)
            if weak > strong:
                return g
    return None
