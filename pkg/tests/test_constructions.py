from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from rtw._backend import find_clique
from rtw.constructions import (ConstructionError, GBESpec, SphereGraph, balanced_parts, be_graph,
                               canonical_coloring, check_be_graph, edge_count_check, gbe_graph, h_graph,
                               independence_number, is_triangle_free, pseudo_erdos_graph, rng_for,
                               sphere_edges, triangle_free_process, turan_graph, u_graph)
from rtw.model import BLUE, HALF, RED, Graph, ModelError, WCCG
from rtw.ramsey import find_mono_clique
from rtw.verification import rho36_extremal


def _adj_sets(g: Graph):
    adj = [set() for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def test_rng_family_is_pcg64():
    a = rng_for(5).integers(0, 2 ** 32, size=4)
    b = np.random.Generator(np.random.PCG64(5)).integers(0, 2 ** 32, size=4)
    assert (a == b).all()
    with pytest.raises(ValueError):
        rng_for(-1)
    with pytest.raises(ValueError):
        rng_for(2 ** 64)


def test_turan_examples():
    assert len(turan_graph(6, 6).edges) == 15
    t63 = turan_graph(6, 3)
    assert len(t63.edges) == 12
    assert independence_number(turan_graph(10, 3))[0] == 4
    assert independence_number(turan_graph(12, 5))[0] == 3
    assert independence_number(turan_graph(12, 6))[0] == 2


def test_turan_edge_count_lower_bound():
    for n in range(1, 61):
        for p in range(1, 8):
            sizes = [len(x) for x in balanced_parts(n, p)]
            assert max(sizes) - min(sizes) <= 1
            assert len(turan_graph(n, p).edges) >= (1 - 1 / p) * n * n / 2 - p


def test_turan_is_densest_partite_small():
    # brute force over every p-coloring of the vertices
    from itertools import product
    for n, p in ((5, 2), (6, 3), (7, 3)):
        best = 0
        for lab in product(range(p), repeat=n):
            best = max(best, sum(lab[i] != lab[j] for i, j in combinations(range(n), 2)))
        assert len(turan_graph(n, p).edges) == best


def test_canonical_coloring_bipartite_red():
    c = canonical_coloring([[0, 1], [2, 3, 4]], [RED, RED], [[None, RED], [RED, None]], [None, None])
    assert sorted((i, j) for i, j, _ in c.edges) == [(a, b) for a in (0, 1) for b in (2, 3, 4)]
    assert all(col is RED for _, _, col in c.edges)
    with pytest.raises(ModelError):
        canonical_coloring([[0], [1]], [RED], [[None, RED], [RED, None]], [None, None])


def test_independence_examples():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert independence_number(c5) == (2, [0, 2])
    outer = [(i, (i + 1) % 5) for i in range(5)]
    petersen = Graph(10, outer + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert independence_number(petersen)[0] == 4 == oracles.independence(_adj_sets(petersen))
    with pytest.raises(ValueError):
        independence_number(Graph(81))


@settings(max_examples=30)
@given(st.integers(1, 14), st.integers(0, 2 ** 63))
def test_independence_matches_bruteforce(n, seed):
    rng = np.random.default_rng(seed)
    g = Graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < 0.4])
    a, wit = independence_number(g)
    assert a == oracles.independence(_adj_sets(g))
    assert all((x, y) not in g.edges for x, y in combinations(wit, 2))


def test_pseudo_erdos():
    g = pseudo_erdos_graph(30, 0)
    assert is_triangle_free(g)
    assert independence_number(pseudo_erdos_graph(50, 0))[0] <= 20
    c5 = pseudo_erdos_graph(5, 0)
    assert len(c5.edges) == 5 and all(len(s) == 2 for s in _adj_sets(c5))
    assert independence_number(c5)[0] == 2


def test_pseudo_erdos_is_maximal_triangle_free():
    g = triangle_free_process(25, 3)
    adj = g.adjacency()
    for i, j in combinations(range(25), 2):
        if (i, j) not in g.edges:
            assert adj[i] & adj[j], "a non-edge could have been added"


def test_pluggable_generator_checked():
    with pytest.raises(ConstructionError):
        pseudo_erdos_graph(3, 0, generator=lambda n, s: Graph(3, [(0, 1), (1, 2), (0, 2)]))


@given(st.integers(1, 40), st.integers(0, 2 ** 64 - 1))
def test_pseudo_erdos_every_seed(n, seed):
    g = pseudo_erdos_graph(n, seed)
    assert is_triangle_free(g)
    assert g == pseudo_erdos_graph(n, seed)


def test_u_and_h_small():
    for n in (15, 24, 30):
        U = u_graph(n, seed=n)
        assert find_mono_clique(U, BLUE, 3) is None and find_mono_clique(U, RED, 5) is None
        H = h_graph(n, seed=n)
        assert find_mono_clique(H, BLUE, 3) is None and find_mono_clique(H, RED, 6) is None


def test_h_graph_last_class_size():
    H = h_graph(40)
    parts = balanced_parts(40, 6)
    assert len(parts[-1]) == 40 // 6
    last = set(parts[-1])
    colors = {col for i, j, col in H.edges if i in last and j in last}
    assert colors <= {BLUE}


def test_be_graph_instance():
    sg = be_graph(200, 20, 0.1, 0)
    check_be_graph(sg)
    assert np.allclose(np.linalg.norm(sg.points, axis=1), 1.0, atol=1e-12)
    assert find_clique(sg.graph.adjacency(), 4) is None
    cross = sum(1 for i, j in sg.graph.edges if (i < 100) != (j < 100))
    assert 0.15 * 200 <= 2 * cross / 200 <= 0.30 * 200


def test_be_edges_rebuild_from_points():
    sg = be_graph(60, 8, 0.5, 3)
    again = sphere_edges(sg.points, sg.classes, sg.mu, False, lambda i, j: "near")
    assert set(again) == set(sg.graph.edges)
    with pytest.raises(ValueError):
        be_graph(7, 20, 0.1, 0)


def test_be_check_reports_witness():
    # a handmade K4 must be caught with its vertices
    pts = np.eye(5)[:4]
    sg = SphereGraph(pts, ((0, 1), (2, 3)), Graph(4, list(combinations(range(4), 2))), 0.1)
    with pytest.raises(ConstructionError) as err:
        check_be_graph(sg)
    assert err.value.witness == [0, 1, 2, 3]


def test_gbe_spec_validation():
    with pytest.raises(ModelError):
        GBESpec(WCCG.uniform(2), (5,))
    with pytest.raises(ModelError):
        GBESpec(WCCG.uniform(2), (5, 0))
    with pytest.raises(ModelError):
        GBESpec(WCCG.uniform(2), (5, 5), mu=1.5)


def test_gbe_full_base_is_multipartite():
    spec = GBESpec(WCCG.uniform(3), (4, 5, 6), 10, 0.3, 0)
    g = gbe_graph(spec)
    cross = {(i, j) for i, j, _ in g.edges if not (i < 4 and j < 4) and not (4 <= i < 9 and 4 <= j < 9)
             and not (i >= 9 and j >= 9)}
    assert len(cross) == 4 * 5 + 4 * 6 + 5 * 6
    spec = GBESpec(WCCG.uniform(4), (150,) * 4, 20, 0.3, 0)
    assert edge_count_check(gbe_graph(spec), spec) < 0.02


def test_gbe_single_class():
    spec = GBESpec(WCCG.from_pairs(1, [RED], {}), (300,), 20, 0.3, 0)
    g = gbe_graph(spec)
    assert g.edges and find_mono_clique(g, RED, 3) is None
    assert edge_count_check(g, spec) < 0.01


def test_gbe_rho36_mu_small_edge_count():
    spec = GBESpec(rho36_extremal(), (150,) * 6, 40, 0.1, 0)
    assert edge_count_check(gbe_graph(spec), spec) < 0.05


def test_gbe_rho36_with_half_edges_safe():
    # halve two pentagon red edges so the geometry is exercised
    base = rho36_extremal().with_pair(0, 1, weight=HALF).with_pair(2, 3, weight=HALF)
    g = gbe_graph(GBESpec(base, (40,) * 6, 20, 0.3, 1))
    assert find_mono_clique(g, BLUE, 3) is None and find_mono_clique(g, RED, 6) is None
