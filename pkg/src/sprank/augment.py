"""Minimum-cost edge additions to reach or maximize strong resilience.

The target problem reduces to a fair b-matching on the complete bipartite
graph: pick a maximum-cardinality edge set with every node used at most
k*+1 times, preferring edges the graph already has.  With two priority
classes and constant node capacities this is exactly a 0/1-cost
min-cost max-flow, which is how it is solved here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import flow as flow_engine
from .errors import InvalidKError, PreconditionFailedError
from .flow import Arc, FlowNetwork
from .pattern import (
    BipartiteGraph,
    complement,
    is_union_of_k_matchings,
    union_disjoint,
)
from .resilience import strong_resilience


@dataclass(frozen=True)
class BMatching:
    """Edge set of K(n,m) with every node incident to at most ``budget`` edges."""

    edges: frozenset[tuple[int, int]]
    budget: int

    def __post_init__(self):
        counts_left: dict[int, int] = {}
        counts_right: dict[int, int] = {}
        for (i, j) in self.edges:
            counts_left[i] = counts_left.get(i, 0) + 1
            counts_right[j] = counts_right.get(j, 0) + 1
        if any(c > self.budget for c in counts_left.values()) or any(
            c > self.budget for c in counts_right.values()
        ):
            raise ValueError(f"some node exceeds the b-matching budget {self.budget}")


@dataclass(frozen=True)
class AugmentationPlan:
    """Edges to add, their count, and the strong resilience they buy."""

    added_edges: tuple[tuple[int, int], ...]
    delta_star: int
    achieved_resilience: int
    result_graph: BipartiteGraph
    b_matching: BMatching | None

    def __post_init__(self):
        assert len(self.added_edges) == self.delta_star


def _fair_b_matching_network(g: BipartiteGraph, k_star: int) -> FlowNetwork:
    """Min-cost-flow encoding of the fair b-matching over K(n,m).

    All of K's edges are unit middle arcs; arcs already in g cost 0, the
    rest cost 1, so among maximum flows the cheapest reuses g maximally.
    """
    n, m = g.n_left, g.n_right
    cap = k_star + 1
    left = lambda i: 2 + i
    right = lambda j: 2 + n + j
    arcs = []
    for i in range(n):
        arcs.append(Arc(0, left(i), cap, kind="E0"))
    for i in range(n):
        for j in range(m):
            cost = 0 if (i, j) in g.edges else 1
            arcs.append(Arc(left(i), right(j), 1, cost=cost, kind="E1", coord=(i, j)))
    for j in range(m):
        arcs.append(Arc(right(j), 1, cap, kind="E0"))
    return FlowNetwork(2 + n + m, 0, 1, tuple(arcs))


def fair_b_matching(g: BipartiteGraph, k_star: int) -> BMatching:
    """A maximum b-matching of K(n,m) with budget k*+1 maximizing overlap with g.

    The result is always a union of k*+1 disjoint left-perfect matchings,
    of cardinality (k*+1)*n.
    """
    if not 0 <= k_star <= g.n_right - 1:
        raise InvalidKError(
            f"target resilience {k_star} outside [0, {g.n_right - 1}]"
        )
    net = _fair_b_matching_network(g, k_star)
    f = flow_engine.min_cost_max_flow(net)
    n = g.n_left
    target = (k_star + 1) * n
    assert f.value == target, "complete graph must admit a full b-matching"
    edges = frozenset(
        a.coord for a, v in zip(net.arcs, f.arc_values) if a.coord is not None and v > 0
    )
    overlap = len(edges & g.edges)
    assert f.cost() + overlap == target, "cost must count exactly the new edges"
    return BMatching(edges, k_star + 1)


def min_edges_for_target(g: BipartiteGraph, k_star: int) -> AugmentationPlan:
    """Fewest complement edges whose addition makes g strongly k*-resilient."""
    if not 0 <= k_star <= g.n_right - 1:
        raise InvalidKError(
            f"target resilience {k_star} outside [0, {g.n_right - 1}]"
        )
    current = strong_resilience(g).strong_resilience
    if current >= k_star:
        return AugmentationPlan((), 0, current, g, None)
    bm = fair_b_matching(g, k_star)
    added = tuple(sorted(bm.edges - g.edges))
    result = BipartiteGraph(g.n_left, g.n_right, g.edges | bm.edges)
    return AugmentationPlan(added, len(added), k_star, result, bm)


def delta_star(g: BipartiteGraph, k_star: int) -> int:
    """Minimum number of added edges for strong k*-resilience."""
    return min_edges_for_target(g, k_star).delta_star


def best_within_budget(
    g: BipartiteGraph, p: int, exact_spend: bool = False
) -> AugmentationPlan:
    """Best strong resilience reachable by adding at most p edges.

    Evaluates the minimum addition cost for every target k in [0, m-1]
    (monotonicity in k is not assumed) and keeps the largest affordable
    target.  With ``exact_spend`` the plan is padded with the
    lexicographically-smallest unused complement edges to spend exactly p.
    """
    if p < 0:
        raise ValueError("budget must be nonnegative")
    best = None
    best_k = -1
    for k in range(g.n_right):
        plan = min_edges_for_target(g, k)
        if plan.delta_star <= p:
            best, best_k = plan, k
    if best is None:
        # Not even rank can be restored within budget.
        return AugmentationPlan((), 0, -1, g, None)
    achieved = max(best.achieved_resilience, best_k)
    if exact_spend and best.delta_star < p:
        spare = [
            e
            for e in sorted(complement(g).edges)
            if e not in best.added_edges
        ][: p - best.delta_star]
        added = tuple(sorted(best.added_edges + tuple(spare)))
        result = BipartiteGraph(g.n_left, g.n_right, g.edges | set(added))
        return AugmentationPlan(added, len(added), achieved, result, best.b_matching)
    return AugmentationPlan(
        best.added_edges, best.delta_star, achieved, best.result_graph, best.b_matching
    )


def increment_matchings(
    g: BipartiteGraph, k: int
) -> tuple[BipartiteGraph, list[tuple[int, int]]]:
    """Add n complement edges lifting a union of k matchings to k+1.

    Solves max flow on the complement network; its value is guaranteed to
    be n whenever the preconditions hold.
    """
    if k >= g.n_right:
        raise InvalidKError(f"k = {k} must be below the column count {g.n_right}")
    if not is_union_of_k_matchings(g, k):
        raise PreconditionFailedError(
            f"graph is not a union of {k} disjoint left-perfect matchings"
        )
    net = flow_engine.build_augmentation_network(g, k)
    f = flow_engine.max_flow(net)
    assert f.value == g.n_left, "complement flow must route one unit per row"
    picked = flow_engine.induced_subgraph(g, f)
    result = union_disjoint(g, picked)
    return result, picked.sorted_edges


def boost_by(
    g: BipartiteGraph, k: int, ell: int
) -> tuple[BipartiteGraph, list[tuple[int, int]]]:
    """Iterate the k -> k+1 step ell times, adding exactly ell*n edges."""
    if not 1 <= ell <= g.n_right - k:
        raise InvalidKError(
            f"ell = {ell} outside [1, {g.n_right - k}] for k = {k}"
        )
    current = g
    added: list[tuple[int, int]] = []
    for step in range(ell):
        current, new_edges = increment_matchings(current, k + step)
        added.extend(new_edges)
    return current, sorted(added)


def complement_matching_structure(g: BipartiteGraph) -> int:
    """For a square union of k perfect matchings, verify the complement is one of n-k.

    Returns n - k.
    """
    if g.n_left != g.n_right:
        raise PreconditionFailedError("graph must be square (n_left == n_right)")
    n = g.n_left
    degs = g.left_degrees()
    k = degs[0] if degs else 0
    if any(d != k for d in degs) or (k > 0 and not is_union_of_k_matchings(g, k)):
        raise PreconditionFailedError(
            "graph is not a union of disjoint perfect matchings"
        )
    comp = complement(g)
    if k < n and not is_union_of_k_matchings(comp, n - k):
        raise PreconditionFailedError(
            "complement fails the disjoint perfect matching decomposition"
        )
    return n - k
