import random

import pytest

import sprank as sp
from sprank import oracle
from sprank.errors import BudgetExceededError, NotDecomposableError, ShapeError

from conftest import random_graph, random_union_of_matchings


class TestStructuralRank:
    def test_fig3(self, fig3_graph):
        assert sp.structural_rank(fig3_graph) == 4

    def test_fig2(self, fig2_graph):
        assert sp.structural_rank(fig2_graph) == 4

    def test_no_edges(self):
        assert sp.structural_rank(sp.BipartiteGraph(3, 3, frozenset())) == 0


class TestStrongResilience:
    def test_fig4_graph(self, fig3_graph):
        r = sp.strong_resilience(fig3_graph)
        assert r.strong_resilience == 1 and r.ell_star == 2

    def test_fig7_graph(self, fig7_graph):
        r = sp.strong_resilience(fig7_graph)
        assert r.ell_star == 2 and r.strong_resilience == 1

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (3, 4)])
    def test_complete_graph(self, n, m):
        assert sp.strong_resilience(sp.complete_graph(n, m)).strong_resilience == m - 1

    def test_fig2_graph(self, fig2_graph):
        # All left degrees 3, right degrees <= 3: union of 3 matchings.
        r = sp.strong_resilience(fig2_graph)
        assert r.strong_resilience == 2
        assert oracle.brute_strong_resilience(fig2_graph) == 2

    def test_rank_deficient(self):
        g = sp.BipartiteGraph(2, 2, frozenset({(0, 0), (1, 0)}))
        r = sp.strong_resilience(g)
        assert r.strong_resilience == -1 and r.ell_star == 0
        assert r.structural_rank == 1
        assert not r.matchings

    def test_isolated_left_node(self):
        g = sp.BipartiteGraph(2, 3, frozenset({(0, 0), (0, 1)}))
        assert sp.strong_resilience(g).strong_resilience == -1

    def test_shape_rejected(self):
        g = sp.BipartiteGraph(3, 2, frozenset())
        with pytest.raises(ShapeError):
            sp.strong_resilience(g)

    def test_linear_scan_agrees_with_bisection(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 5))
            if g.n_right < g.n_left:
                continue
            a = sp.strong_resilience(g)
            b = sp.strong_resilience(g, linear_scan=True)
            assert a.ell_star == b.ell_star

    def test_report_witness_invariants(self, fig3_graph):
        r = sp.strong_resilience(fig3_graph)
        assert sp.is_union_of_k_matchings(r.witness_subgraph, r.ell_star)
        seen = set()
        for m in r.matchings:
            assert m.is_left_perfect(fig3_graph.n_left)
            assert m.edges <= fig3_graph.edges
            assert not (m.edges & seen)
            seen |= m.edges

    def test_monotone_feasibility(self):
        # Saturation at ell implies saturation at every smaller ell.
        rng = random.Random(3)
        for _ in range(15):
            g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 5))
            if g.n_right < g.n_left:
                continue
            r = sp.strong_resilience(g)
            for ell in range(r.ell_star + 1):
                net = sp.build_resilience_network(g, ell)
                assert sp.max_flow(net).value == g.n_left * ell

    def test_degree_cap(self):
        rng = random.Random(17)
        for _ in range(15):
            g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 5))
            if g.n_right < g.n_left or not g.edges:
                continue
            r = sp.strong_resilience(g)
            assert r.ell_star <= min(g.left_degrees())

    def test_edge_bound(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 5))
            if g.n_right < g.n_left:
                continue
            k = sp.strong_resilience(g).strong_resilience
            if k >= 0:
                assert len(g.edges) >= (k + 1) * g.n_left

    def test_monotone_under_edge_addition(self):
        rng = random.Random(41)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 4), rng.randint(1, 5))
            if g.n_right < g.n_left:
                continue
            missing = sorted(sp.complement(g).edges)
            if not missing:
                continue
            extra = rng.choice(missing)
            bigger = sp.BipartiteGraph(g.n_left, g.n_right, g.edges | {extra})
            assert (
                sp.strong_resilience(bigger).strong_resilience
                >= sp.strong_resilience(g).strong_resilience
            )


class TestExtractDisjointMatchings:
    def test_fig6_subgraph(self, fig3_graph):
        net = sp.build_resilience_network(fig3_graph, 2)
        sub = sp.induced_subgraph(fig3_graph, sp.max_flow(net))
        matchings = sp.extract_disjoint_matchings(sub, 2)
        assert len(matchings) == 2
        assert matchings[0].edges | matchings[1].edges == sub.edges
        assert not (matchings[0].edges & matchings[1].edges)

    def test_single_matching(self):
        g = sp.BipartiteGraph(3, 3, frozenset({(0, 0), (1, 1), (2, 2)}))
        [m] = sp.extract_disjoint_matchings(g, 1)
        assert m.edges == g.edges

    def test_complete_3x3_partitions(self):
        matchings = sp.extract_disjoint_matchings(sp.complete_graph(3, 3), 3)
        union = frozenset().union(*(m.edges for m in matchings))
        assert len(matchings) == 3
        assert union == sp.complete_graph(3, 3).edges
        assert sum(len(m.edges) for m in matchings) == 9

    def test_not_decomposable(self, fig3_graph):
        with pytest.raises(NotDecomposableError):
            sp.extract_disjoint_matchings(fig3_graph, 2)

    def test_random_unions_round_trip(self):
        rng = random.Random(59)
        for _ in range(30):
            n = rng.randint(1, 5)
            m = rng.randint(n, 6)
            k = rng.randint(1, min(3, m))
            g = random_union_of_matchings(rng, n, m, k)
            matchings = sp.extract_disjoint_matchings(g, k)
            union = frozenset().union(*(mm.edges for mm in matchings))
            assert union == g.edges
            assert sum(len(mm.edges) for mm in matchings) == k * n


class TestWeakResilience:
    def test_fig4_graph(self, fig3_graph):
        assert sp.weak_resilience(fig3_graph) == 1

    @pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3)])
    def test_complete_graph(self, n, m):
        assert sp.weak_resilience(sp.complete_graph(n, m)) == m - 1

    def test_isolated_left_node(self):
        g = sp.BipartiteGraph(2, 3, frozenset({(0, 0)}))
        assert sp.weak_resilience(g) == -1

    def test_budget_exceeded_carries_lower_bound(self, fig3_graph):
        with pytest.raises(BudgetExceededError) as exc:
            sp.weak_resilience(fig3_graph, budget=5)
        assert exc.value.lower_bound == 0

    def test_sandwich_with_strong(self):
        rng = random.Random(67)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 3), rng.randint(1, 4))
            if g.n_right < g.n_left:
                continue
            assert sp.weak_resilience(g) >= sp.strong_resilience(g).strong_resilience
