import numpy as np
import pytest

from expcodes.graphs import (
    BipartiteGraph,
    complete_bipartite,
    random_regular_bipartite,
    spectral,
)


def dense_second_singular(graph) -> float:
    svals = np.linalg.svd(graph.biadjacency(), compute_uv=False)
    return float(np.sort(svals)[-2])


def test_complete_bipartite_structure():
    g = complete_bipartite(4)
    assert g.num_edges == 16
    assert all(len(lst) == 4 for lst in g.incidence_a + g.incidence_b)
    info = spectral(g)
    assert info.lam <= 1e-10
    assert info.gamma <= 1e-10
    assert info.ramanujan


def test_complete_bipartite_degree_two_four_cycle():
    info = spectral(complete_bipartite(2))
    assert abs(info.gamma) <= 1e-10


def test_six_cycle_second_eigenvalue():
    # n=3, delta=2 cycle: adjacency spectrum 2cos(pi k/3), second value 1
    edges = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]
    g = BipartiteGraph(3, 2, edges)
    info = spectral(g)
    assert abs(info.lam - 1.0) < 1e-6


def test_incidence_ordering_rule():
    g = complete_bipartite(3)
    for a in range(3):
        opposite = [g.edges[e][1] for e in g.incidence_a[a]]
        assert opposite == sorted(opposite)
    for b in range(3):
        opposite = [g.edges[e][0] for e in g.incidence_b[b]]
        assert opposite == sorted(opposite)


def test_disconnected_rejected():
    # two disjoint 4-cycles
    edges = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]
    with pytest.raises(ValueError):
        BipartiteGraph(4, 2, edges)


def test_irregular_rejected():
    edges = [(0, 0), (0, 1), (1, 0), (0, 1)]
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, edges)


def test_random_regular_basic():
    g = random_regular_bipartite(50, 4, seed=42)
    assert g.num_edges == 200
    assert all(len(lst) == 4 for lst in g.incidence_a + g.incidence_b)
    assert len(set(g.edges)) == 200  # simple
    info = spectral(g)
    assert 0.0 < info.gamma < 1.0


def test_random_regular_deterministic():
    g1 = random_regular_bipartite(30, 3, seed=7)
    g2 = random_regular_bipartite(30, 3, seed=7)
    assert g1.edges == g2.edges
    g3 = random_regular_bipartite(30, 3, seed=8)
    assert g1.edges != g3.edges


def test_n_equals_delta_gives_complete_graph():
    g = random_regular_bipartite(4, 4, seed=1)
    assert set(g.edges) == set(complete_bipartite(4).edges)


def test_power_iteration_matches_dense_oracle():
    cases = [(20, 3, 1), (50, 4, 2), (100, 5, 3), (64, 4, 9)]
    for n, delta, seed in cases:
        g = random_regular_bipartite(n, delta, seed=seed)
        assert abs(spectral(g).lam - dense_second_singular(g)) < 1e-6


def test_edge_list_text_roundtrip():
    g = random_regular_bipartite(12, 3, seed=5)
    text = g.to_edge_list_text()
    back = BipartiteGraph.from_edge_list_text(text)
    assert back.edges == g.edges
    assert back.seed == 5
    assert back.incidence_a == g.incidence_a
    header = text.splitlines()[0].split()
    assert header == ["12", "3", "5"]


def test_delta_larger_than_n_rejected():
    with pytest.raises(ValueError):
        random_regular_bipartite(3, 4, seed=0)
