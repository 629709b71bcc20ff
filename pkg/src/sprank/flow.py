"""Integer-capacity flow networks and the two resilience constructions.

Two network builders are provided:

* :func:`build_resilience_network` routes flow s -> rows -> columns -> t
  through the pattern's own edges, with source/sink capacity ``ell``.  A
  saturated flow (value n*ell) certifies ell disjoint left-perfect matchings.
* :func:`build_augmentation_network` routes flow through the *complement*
  edges, with sink capacities (k+1) - deg(column); a flow of value n picks
  n complement edges that lift a union of k matchings to k+1.

Solvers are deterministic: nodes and arcs are scanned in ascending index
order, so repeated runs on the same network produce identical flows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
import heapq

from .errors import NotMaximalError, TagMismatchError
from .pattern import BipartiteGraph

# When enabled (test builds), every max_flow call also extracts a min cut and
# asserts the max-flow = min-cut identity.  Counters let tests confirm the
# hook actually fired.
VERIFY_MIN_CUT = False
MIN_CUT_CHECKS = 0


@dataclass(frozen=True)
class Arc:
    """A directed arc with integer capacity and cost.

    ``kind`` is "E0" or "E1" following the network construction that made the
    arc; ``coord`` carries the 0-based pattern coordinate for arcs that
    correspond to (non-)edges of the underlying bipartite graph.
    """

    tail: int
    head: int
    capacity: int
    cost: int = 0
    kind: str = ""
    coord: tuple[int, int] | None = None

    def __post_init__(self):
        if self.capacity < 0 or self.cost < 0:
            raise ValueError("capacities and costs must be nonnegative integers")


@dataclass(frozen=True)
class FlowNetwork:
    """A directed network with distinguished source and sink nodes."""

    node_count: int
    source: int
    sink: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        seen = set()
        for a in self.arcs:
            if not (0 <= a.tail < self.node_count and 0 <= a.head < self.node_count):
                raise ValueError(f"arc ({a.tail}, {a.head}) out of range")
            if a.head == self.source:
                raise ValueError("source must have no incoming arcs")
            if a.tail == self.sink:
                raise ValueError("sink must have no outgoing arcs")
            if (a.tail, a.head) in seen:
                raise ValueError(f"duplicate arc ({a.tail}, {a.head})")
            seen.add((a.tail, a.head))


@dataclass(frozen=True)
class Flow:
    """An integral flow assignment on a network."""

    network: FlowNetwork
    arc_values: tuple[int, ...]
    value: int

    def __post_init__(self):
        net = self.network
        if len(self.arc_values) != len(net.arcs):
            raise ValueError("one flow value per arc required")
        balance = [0] * net.node_count
        for a, v in zip(net.arcs, self.arc_values):
            if not 0 <= v <= a.capacity:
                raise ValueError(f"flow {v} violates capacity {a.capacity}")
            balance[a.tail] -= v
            balance[a.head] += v
        for node in range(net.node_count):
            if node in (net.source, net.sink):
                continue
            if balance[node] != 0:
                raise ValueError(f"flow unbalanced at node {node}")
        if -balance[net.source] != self.value or balance[net.sink] != self.value:
            raise ValueError("flow value must equal source outflow and sink inflow")

    def cost(self) -> int:
        return sum(a.cost * v for a, v in zip(self.network.arcs, self.arc_values))


@dataclass(frozen=True)
class Cut:
    """An s-t cut given by its source-side node set."""

    source_side: frozenset[int]
    capacity: int


def build_resilience_network(g: BipartiteGraph, ell: int) -> FlowNetwork:
    """Directed network whose saturated flows certify ell disjoint matchings.

    Node layout: 0 = s, 1 = t, 2..2+n-1 = left nodes, then right nodes.
    Source and sink arcs have capacity ell; each pattern edge becomes a
    unit-capacity middle arc tagged with its coordinate.
    """
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    n, m = g.n_left, g.n_right
    left = lambda i: 2 + i
    right = lambda j: 2 + n + j
    arcs = []
    for i in range(n):
        arcs.append(Arc(0, left(i), ell, kind="E0"))
    for (i, j) in g.sorted_edges:
        arcs.append(Arc(left(i), right(j), 1, kind="E1", coord=(i, j)))
    for j in range(m):
        arcs.append(Arc(right(j), 1, ell, kind="E0"))
    return FlowNetwork(2 + n + m, 0, 1, tuple(arcs))


def build_augmentation_network(g: BipartiteGraph, k: int) -> FlowNetwork:
    """Directed network over the complement of g for the k -> k+1 step.

    Unit arcs s -> row and row -> column for every non-edge; sink arcs
    column -> t with capacity max(0, (k+1) - deg(column)).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n, m = g.n_left, g.n_right
    left = lambda i: 2 + i
    right = lambda j: 2 + n + j
    right_deg = g.right_degrees()
    arcs = []
    for i in range(n):
        arcs.append(Arc(0, left(i), 1, kind="E0"))
    for i in range(n):
        for j in range(m):
            if (i, j) not in g.edges:
                arcs.append(Arc(left(i), right(j), 1, kind="E0", coord=(i, j)))
    for j in range(m):
        cap = max(0, (k + 1) - right_deg[j])
        arcs.append(Arc(right(j), 1, cap, kind="E1"))
    return FlowNetwork(2 + n + m, 0, 1, tuple(arcs))


def _residual_adjacency(net: FlowNetwork):
    """adj[node] -> list of (neighbor, arc index, forward?) in scan order."""
    adj = [[] for _ in range(net.node_count)]
    for idx, a in enumerate(net.arcs):
        adj[a.tail].append((a.head, idx, True))
        adj[a.head].append((a.tail, idx, False))
    for entries in adj:
        entries.sort(key=lambda e: (e[0], not e[2], e[1]))
    return adj


def max_flow(net: FlowNetwork) -> Flow:
    """Integral maximum flow via shortest augmenting paths (Edmonds-Karp)."""
    adj = _residual_adjacency(net)
    values = [0] * len(net.arcs)
    total = 0
    while True:
        # BFS for a shortest residual s-t path, smallest-index tie-break.
        prev = [None] * net.node_count
        prev[net.source] = (net.source, -1, True)
        queue = deque([net.source])
        while queue:
            u = queue.popleft()
            if u == net.sink:
                break
            for (v, idx, fwd) in adj[u]:
                if prev[v] is not None:
                    continue
                residual = net.arcs[idx].capacity - values[idx] if fwd else values[idx]
                if residual > 0:
                    prev[v] = (u, idx, fwd)
                    queue.append(v)
        if prev[net.sink] is None:
            break
        # Bottleneck and augmentation.
        path = []
        v = net.sink
        while v != net.source:
            u, idx, fwd = prev[v]
            path.append((idx, fwd))
            v = u
        bottleneck = min(
            net.arcs[idx].capacity - values[idx] if fwd else values[idx]
            for (idx, fwd) in path
        )
        for (idx, fwd) in path:
            values[idx] += bottleneck if fwd else -bottleneck
        total += bottleneck
    flow = Flow(net, tuple(values), total)
    _maybe_verify_min_cut(net, flow)
    return flow


def min_cut(net: FlowNetwork, f: Flow) -> Cut:
    """Source side of a minimum cut: residual-reachable nodes from s."""
    adj = _residual_adjacency(net)
    reachable = {net.source}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for (v, idx, fwd) in adj[u]:
            if v in reachable:
                continue
            residual = net.arcs[idx].capacity - f.arc_values[idx] if fwd else f.arc_values[idx]
            if residual > 0:
                reachable.add(v)
                queue.append(v)
    if net.sink in reachable:
        raise NotMaximalError("a residual augmenting path exists; flow is not maximum")
    capacity = sum(
        a.capacity
        for a in net.arcs
        if a.tail in reachable and a.head not in reachable
    )
    return Cut(frozenset(reachable), capacity)


def _maybe_verify_min_cut(net: FlowNetwork, flow: Flow) -> None:
    global MIN_CUT_CHECKS
    if not VERIFY_MIN_CUT:
        return
    cut = min_cut(net, flow)
    assert cut.capacity == flow.value, (
        f"max-flow {flow.value} != min-cut {cut.capacity}"
    )
    MIN_CUT_CHECKS += 1


def min_cost_max_flow(net: FlowNetwork) -> Flow:
    """Minimum-cost maximum flow via successive shortest paths.

    Costs must be nonnegative (true for all networks built here), so
    Dijkstra with potentials suffices; no negative-cycle handling.
    """
    adj = _residual_adjacency(net)
    values = [0] * len(net.arcs)
    potential = [0] * net.node_count
    total = 0
    inf = float("inf")
    while True:
        dist = [inf] * net.node_count
        prev = [None] * net.node_count
        dist[net.source] = 0
        heap = [(0, net.source)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for (v, idx, fwd) in adj[u]:
                arc = net.arcs[idx]
                residual = arc.capacity - values[idx] if fwd else values[idx]
                if residual <= 0:
                    continue
                cost = arc.cost if fwd else -arc.cost
                nd = d + cost + potential[u] - potential[v]
                if nd < dist[v]:
                    dist[v] = nd
                    prev[v] = (u, idx, fwd)
                    heapq.heappush(heap, (nd, v))
        if dist[net.sink] == inf:
            break
        for node in range(net.node_count):
            if dist[node] < inf:
                potential[node] += dist[node]
        path = []
        v = net.sink
        while v != net.source:
            u, idx, fwd = prev[v]
            path.append((idx, fwd))
            v = u
        bottleneck = min(
            net.arcs[idx].capacity - values[idx] if fwd else values[idx]
            for (idx, fwd) in path
        )
        for (idx, fwd) in path:
            values[idx] += bottleneck if fwd else -bottleneck
        total += bottleneck
    flow = Flow(net, tuple(values), total)
    _maybe_verify_min_cut(net, flow)
    return flow


def induced_subgraph(g: BipartiteGraph, f: Flow) -> BipartiteGraph:
    """Edges whose tagged arcs carry nonzero flow, as a graph on g's nodes.

    For resilience networks this is a subgraph of g; for augmentation
    networks it is a subgraph of g's complement.
    """
    tagged = [
        (a.coord, v)
        for a, v in zip(f.network.arcs, f.arc_values)
        if a.coord is not None
    ]
    if not tagged:
        raise TagMismatchError("flow's network carries no pattern-coordinate tags")
    edges = frozenset(coord for (coord, v) in tagged if v > 0)
    return BipartiteGraph(g.n_left, g.n_right, edges)
