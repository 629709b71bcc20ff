"""Structural rank and the exact degree of strong resilience.

The degree of strong resilience of a graph is one less than the largest ell
for which the resilience network admits a saturated flow of value n*ell;
that flow's induced subgraph decomposes into ell disjoint left-perfect
matchings.  Weak resilience has no known efficient characterization and is
computed here by direct subset enumeration under a work budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import flow as flow_engine
from .errors import BudgetExceededError, NotDecomposableError, ShapeError
from .pattern import BipartiteGraph, Matching, is_union_of_k_matchings

DEFAULT_WEAK_BUDGET = 10**6


@dataclass(frozen=True)
class ResilienceReport:
    """Answer to "how resilient is this pattern", with a matching witness."""

    structural_rank: int
    strong_resilience: int
    ell_star: int
    matchings: tuple[Matching, ...]
    witness_subgraph: BipartiteGraph

    def __post_init__(self):
        assert self.strong_resilience == self.ell_star - 1
        assert len(self.matchings) == self.ell_star
        union = frozenset().union(*(m.edges for m in self.matchings)) if self.matchings else frozenset()
        assert union == self.witness_subgraph.edges
        assert sum(len(m.edges) for m in self.matchings) == len(union)


def structural_rank(g: BipartiteGraph) -> int:
    """Maximum matching size, i.e. the structural rank of the pattern."""
    net = flow_engine.build_resilience_network(g, 1)
    return flow_engine.max_flow(net).value


def _saturated_flow(g: BipartiteGraph, ell: int):
    """Max flow at level ell, or None if it falls short of n*ell."""
    net = flow_engine.build_resilience_network(g, ell)
    f = flow_engine.max_flow(net)
    return f if f.value == g.n_left * ell else None


def strong_resilience(g: BipartiteGraph, linear_scan: bool = False) -> ResilienceReport:
    """Exact degree of strong resilience with a decomposition witness.

    The default searches ell by bisection over [0, min left degree], valid
    because saturated-flow feasibility is monotone decreasing in ell.
    ``linear_scan=True`` instead decrements ell from m, for cross-checking.
    """
    if g.n_right < g.n_left:
        raise ShapeError(
            f"graph has {g.n_left} left but only {g.n_right} right nodes"
        )
    n = g.n_left
    left_degs = g.left_degrees()
    rank = structural_rank(g)
    if rank < n or min(left_degs) == 0:
        return ResilienceReport(rank, -1, 0, (), BipartiteGraph(n, g.n_right, frozenset()))

    upper = min(min(left_degs), g.n_right)
    if linear_scan:
        ell_star = 0
        for ell in range(upper, 0, -1):
            if _saturated_flow(g, ell) is not None:
                ell_star = ell
                break
    else:
        # rank == n makes ell = 1 feasible; bisect for the largest feasible.
        lo, hi = 1, upper
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if _saturated_flow(g, mid) is not None:
                lo = mid
            else:
                hi = mid - 1
        ell_star = lo

    f = _saturated_flow(g, ell_star)
    witness = flow_engine.induced_subgraph(g, f)
    matchings = extract_disjoint_matchings(witness, ell_star)
    return ResilienceReport(rank, ell_star - 1, ell_star, tuple(matchings), witness)


def _peel_matching(h: BipartiteGraph, k: int) -> BipartiteGraph:
    """A left-perfect matching of h covering every right node of degree k.

    Covering the full-degree right nodes is what keeps the residual graph
    decomposable into k-1 disjoint matchings; an arbitrary left-perfect
    matching may miss one of them.  Encoded as a min-cost flow where
    skipping a full-degree column costs 1.
    """
    n, m = h.n_left, h.n_right
    right_degs = h.right_degrees()
    arcs = []
    for i in range(n):
        arcs.append(flow_engine.Arc(0, 2 + i, 1, kind="E0"))
    for (i, j) in h.sorted_edges:
        arcs.append(flow_engine.Arc(2 + i, 2 + n + j, 1, kind="E1", coord=(i, j)))
    for j in range(m):
        cost = 0 if right_degs[j] == k else 1
        arcs.append(flow_engine.Arc(2 + n + j, 1, 1, cost=cost, kind="E0"))
    net = flow_engine.FlowNetwork(2 + n + m, 0, 1, tuple(arcs))
    f = flow_engine.min_cost_max_flow(net)
    assert f.value == n, "residual graph lost its left-perfect matching"
    full = sum(1 for d in right_degs if d == k)
    assert f.cost() == n - full, "matching must cover every full-degree column"
    return flow_engine.induced_subgraph(h, f)


def extract_disjoint_matchings(h: BipartiteGraph, ell: int) -> list[Matching]:
    """Split a union of ell disjoint left-perfect matchings into its parts.

    Peels one left-perfect matching at a time, always covering the columns
    of maximal degree so each residual graph again satisfies the degree
    conditions at the next level down.
    """
    if not is_union_of_k_matchings(h, ell):
        raise NotDecomposableError(
            f"graph is not a union of {ell} disjoint left-perfect matchings"
        )
    matchings = []
    current = h
    for level in range(ell, 0, -1):
        picked = _peel_matching(current, level)
        matchings.append(Matching(picked.edges))
        current = BipartiteGraph(h.n_left, h.n_right, current.edges - picked.edges)
    return matchings


def weak_resilience(g: BipartiteGraph, budget: int = DEFAULT_WEAK_BUDGET) -> int:
    """Exact weak resilience by enumerating removal subsets.

    Largest k such that removing ANY k edges leaves a left-perfect matching;
    -1 if the graph has none to begin with.  Raises BudgetExceededError
    (carrying the certified lower bound) once ``budget`` subset tests are
    spent.
    """
    n = g.n_left
    if structural_rank(g) < n:
        return -1
    edges = g.sorted_edges
    remaining = budget
    verified = 0
    for size in range(1, len(edges) + 1):
        for removed in combinations(edges, size):
            if remaining <= 0:
                raise BudgetExceededError(
                    f"weak resilience budget exhausted; >= {verified} certified",
                    lower_bound=verified,
                )
            remaining -= 1
            reduced = BipartiteGraph(n, g.n_right, g.edges - set(removed))
            if structural_rank(reduced) < n:
                return size - 1
        verified = size
    # Unreachable for nonempty graphs: removing all edges kills the matching.
    return len(edges) - 1
