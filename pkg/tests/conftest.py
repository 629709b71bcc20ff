import random

import pytest

import sprank as sp
from sprank import flow as flow_engine


@pytest.fixture(autouse=True)
def _verify_min_cut():
    # Assert max-flow = min-cut on every solver invocation in test builds.
    flow_engine.VERIFY_MIN_CUT = True
    yield
    flow_engine.VERIFY_MIN_CUT = False


FIG3_STARS = [
    (1, 1), (1, 2),
    (2, 1), (2, 2), (2, 4),
    (3, 2), (3, 3), (3, 4),
    (4, 4), (4, 5),
]

FIG7_STARS = [(1, 1), (1, 2), (2, 1), (2, 2)]

FIG2_ROWS = [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}]


@pytest.fixture
def fig3_graph():
    return sp.to_bipartite(sp.pattern_from_stars(4, 5, FIG3_STARS))


@pytest.fixture
def fig7_graph():
    return sp.to_bipartite(sp.pattern_from_stars(2, 3, FIG7_STARS))


@pytest.fixture
def fig2_graph():
    stars = [(r + 1, c) for r, cols in enumerate(FIG2_ROWS) for c in cols]
    return sp.to_bipartite(sp.pattern_from_stars(4, 6, stars))


def random_graph(rng: random.Random, n: int, m: int, p: float = 0.5) -> sp.BipartiteGraph:
    edges = frozenset(
        (i, j) for i in range(n) for j in range(m) if rng.random() < p
    )
    return sp.BipartiteGraph(n, m, edges)


def random_union_of_matchings(
    rng: random.Random, n: int, m: int, k: int
) -> sp.BipartiteGraph:
    """A union of k disjoint left-perfect matchings, by rejection sampling."""
    while True:
        edges: set = set()
        ok = True
        for _ in range(k):
            cols = rng.sample(range(m), n)
            matching = {(i, cols[i]) for i in range(n)}
            if matching & edges:
                ok = False
                break
            edges |= matching
        if ok:
            return sp.BipartiteGraph(n, m, frozenset(edges))
