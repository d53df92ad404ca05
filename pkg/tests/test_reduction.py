from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from rtw.constructions import independence_number, u_graph
from rtw.genclique import max_generalized_clique
from rtw.model import BLUE, HALF, ONE, RED, ZERO, ColoredGraph, Graph, ModelError
from rtw.ramsey import nice_coloring
from rtw.reduction import (ClusterGraph, check_eps_regular, cluster_weights, collapse, density_band,
                           edit_distance, edit_distance_bruteforce, symmetrize, two_color_partition,
                           weighted_turan)

F = Fraction


def _complete(n, color):
    return ColoredGraph(n, [(i, j, color) for i, j in combinations(range(n), 2)])


def _alpha(adj_bits, verts):
    verts = list(verts)
    if not verts:
        return 0
    sub = Graph(len(verts), [(a, b) for a, b in combinations(range(len(verts)), 2)
                             if adj_bits[verts[a]] >> verts[b] & 1])
    if len(verts) <= 14:
        return oracles.independence([{b for b in range(sub.n) if (min(a, b), max(a, b)) in sub.edges}
                                     for a in range(sub.n)])
    return independence_number(sub)[0]


# ------------------------------------------------------------ partition

def test_partition_all_red():
    r = two_color_partition(_complete(10, RED), F(1, 5))
    assert r.U1 == () and r.U2 == tuple(range(10))


def test_partition_all_blue():
    r = two_color_partition(_complete(10, BLUE), F(1, 5))
    assert r.U1 == tuple(range(10)) and r.U2 == () and r.extractions == 0


def test_partition_pentagon_blowup():
    g = u_graph(30, seed=2)
    r = two_color_partition(g, F(1, 5))
    n = 30
    assert r.alpha1 ** 2 <= F(1, 5) * n * n and r.alpha2 ** 2 <= F(1, 5) * n * n
    assert _alpha(g.adjacency(BLUE), r.U1) == r.alpha1
    assert _alpha(g.adjacency(RED), r.U2) == r.alpha2
    assert sorted(r.U1 + r.U2) == list(range(n))


def test_partition_precondition():
    with pytest.raises(ValueError, match="precondition"):
        two_color_partition(ColoredGraph(10, [(0, 1, RED)]), F(1, 5))


@settings(max_examples=20)
@given(st.integers(6, 16), st.integers(0, 2 ** 32))
def test_partition_postcondition_random(n, seed):
    rng = np.random.default_rng(seed)
    edges = [(i, j, RED if rng.random() < 0.5 else BLUE) for i, j in combinations(range(n), 2)
             if rng.random() < 0.85]
    g = ColoredGraph(n, edges)
    a = oracles.independence([{u for u in range(n) if g.adjacency()[v] >> u & 1} for v in range(n)])
    delta = F(a, n) if a < n else F(n - 1, n)
    if a > delta * n:
        return
    r = two_color_partition(g, delta)
    assert _alpha(g.adjacency(BLUE), r.U1) ** 2 <= delta * n * n
    assert _alpha(g.adjacency(RED), r.U2) ** 2 <= delta * n * n
    assert r.extractions <= int(1 / float(delta) ** 0.5) + 1


# ------------------------------------------------------------ regularity

def test_regularity_examples():
    full = Graph(8, [(i, j) for i in range(4) for j in range(4, 8)])
    assert check_eps_regular(full, range(4), range(4, 8), F(1, 10))
    assert check_eps_regular(Graph(8), range(4), range(4, 8), F(1, 10))
    block = Graph(8, [(i, j) for i in range(2) for j in range(4, 6)])
    assert not check_eps_regular(block, range(4), range(4, 8), F(1, 4))
    with pytest.raises(ValueError):
        check_eps_regular(Graph(34), range(17), range(17, 34), F(1, 4))


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(1, 5), st.sampled_from([F(1, 5), F(1, 4), F(1, 3), F(1, 2)]),
       st.integers(0, 2 ** 32))
def test_regularity_matches_bruteforce(a, b, eps, seed):
    rng = np.random.default_rng(seed)
    X, Y = list(range(a)), list(range(a, a + b))
    edges = {(x, y) for x in X for y in Y if rng.random() < 0.5}
    g = Graph(a + b, edges)
    assert check_eps_regular(g, X, Y, eps) == oracles.eps_regular(edges, X, Y, eps)


# ------------------------------------------------------------ cluster weights

def test_density_bands():
    assert density_band(F(1, 10), F(1, 10)) == ZERO
    assert density_band(F(6, 10), F(1, 20)) == ONE
    assert density_band(F(3, 10), F(1, 10)) == HALF
    assert density_band(F(1, 5), F(1, 10)) == HALF


def test_collapse_rule():
    assert collapse(HALF, ONE, RED) == (HALF, HALF)
    assert collapse(ONE, HALF, BLUE) == (HALF, HALF)
    assert collapse(HALF, HALF, RED) == (HALF, HALF)
    with pytest.raises(ModelError):
        collapse(ONE, ONE, RED)


def _two_part_graph(blue_edges, red_edges):
    return ColoredGraph(8, [(i, j, BLUE) for i, j in blue_edges] + [(i, j, RED) for i, j in red_edges])


def test_cluster_weights_bands_and_collapse():
    X, Y = range(4), range(4, 8)
    pairs = [(x, y) for x in X for y in Y]
    # blue density 6/16 (half band at mu = 1/20), red density 10/16 (full band)
    g = _two_part_graph(pairs[:6], pairs[6:])
    h = cluster_weights(g, [list(X), list(Y)], F(1, 20))
    assert (h.weight(BLUE, 0, 1), h.weight(RED, 0, 1)) == (HALF, HALF)
    # blue cluster vertices reduce blue instead
    h = cluster_weights(g, [list(X), list(Y)], F(1, 20), vertex_colors=[BLUE, BLUE])
    assert (h.weight(BLUE, 0, 1), h.weight(RED, 0, 1)) == (ZERO, ONE)


def test_cluster_weights_low_density_is_zero():
    X, Y = range(4), range(4, 8)
    pairs = [(x, y) for x in X for y in Y]
    g = _two_part_graph(pairs[:1], [])
    h = cluster_weights(g, [list(X), list(Y)], F(1, 10))
    assert h.weight(BLUE, 0, 1) == ZERO


def test_cluster_weights_errors():
    g = _complete(4, RED)
    with pytest.raises(ModelError):
        cluster_weights(g, [[0, 1], [1, 2, 3]], F(1, 10))
    with pytest.raises(ModelError):
        cluster_weights(g, [[0, 1], [2]], F(1, 10))


def test_cluster_weights_regularity_flag():
    X, Y = list(range(4)), list(range(4, 8))
    g = _two_part_graph([(i, j) for i in range(2) for j in range(4, 6)], [])
    assert cluster_weights(g, [X, Y], F(1, 20)).weight(BLUE, 0, 1) == HALF
    assert cluster_weights(g, [X, Y], F(1, 20), eps=F(1, 4)).weight(BLUE, 0, 1) == ZERO


@settings(max_examples=30)
@given(st.integers(0, 2 ** 32))
def test_cluster_weights_monotone_in_density(seed):
    rng = np.random.default_rng(seed)
    X, Y = list(range(4)), list(range(4, 8))
    pairs = [(x, y) for x in X for y in Y]
    order = [pairs[i] for i in rng.permutation(len(pairs))]
    k = int(rng.integers(0, len(pairs)))
    lo = ColoredGraph(8, [(i, j, BLUE) for i, j in order[:k]])
    hi = ColoredGraph(8, [(i, j, BLUE) for i, j in order[:k + 1]])
    mu = F(1, 20)
    assert (cluster_weights(hi, [X, Y], mu).weight(BLUE, 0, 1)
            >= cluster_weights(lo, [X, Y], mu).weight(BLUE, 0, 1))


# ------------------------------------------------------------ symmetrize

@st.composite
def cluster_graphs(draw, max_m=8):
    m = draw(st.integers(1, max_m))
    vc = draw(st.lists(st.sampled_from([RED, BLUE]), min_size=m, max_size=m))
    opts = [(ZERO, ZERO), (ZERO, ZERO), (HALF, ZERO), (ZERO, HALF), (ONE, ZERO), (ZERO, ONE), (HALF, HALF)]
    entries = {(i, j): draw(st.sampled_from(opts)) for i, j in combinations(range(m), 2)}
    return ClusterGraph.build(m, vc, entries)


def test_symmetrize_identity_without_zero_pairs():
    h = weighted_turan(6, 6)
    r = symmetrize(h)
    assert r.quotient.t == 6 and r.class_of == tuple(range(6)) and r.steps == ()


def test_symmetrize_merges_twins():
    h = ClusterGraph.build(2, [RED, RED], {})
    r = symmetrize(h)
    assert r.quotient.t == 1 and r.class_weights.u == (ONE,)


def test_symmetrize_noisy_turan():
    base = weighted_turan(12, 6)
    rng = np.random.default_rng(4)
    for _ in range(5):
        w = [[list(row) for row in base.w[k]] for k in (0, 1)]
        for _ in range(3):
            i, j = sorted(int(x) for x in rng.choice(12, 2, replace=False))
            for k in (0, 1):
                w[k][i][j] = w[k][j][i] = ZERO
        h = ClusterGraph(12, base.vertex_colors, tuple(tuple(map(tuple, w[k])) for k in (0, 1)))
        r = symmetrize(h)
        assert r.quotient.t == 6
        assert all(a <= b for a, b in zip(r.masses, r.masses[1:]))
        # class sizes may end unbalanced, so the balanced 60 is only an upper bound
        assert r.masses[-1] <= 60


def test_symmetrize_half_half_pair():
    # two classes joined by 1/2 blue and 1/2 red become one full edge opposite to the first class color
    h = ClusterGraph.build(2, [RED, BLUE], {(0, 1): (HALF, HALF)})
    q = symmetrize(h).quotient
    assert q.colors[0][1] is BLUE and q.weights[0][1] == ONE


@settings(max_examples=60)
@given(cluster_graphs())
def test_symmetrize_properties(h):
    r = symmetrize(h)
    assert all(a <= b for a, b in zip(r.masses, r.masses[1:]))
    assert r.masses[0] == h.mass()
    for c in (RED, BLUE):
        assert r.final.genclique_size(c) <= h.genclique_size(c)
        assert max_generalized_clique(r.quotient, c).size <= r.final.genclique_size(c)
    assert sum(r.class_weights.u) == 1


# ------------------------------------------------------------ weighted Turan

def test_weighted_turan_masses():
    assert weighted_turan(12, 6).mass() == 60 == F(5, 12) * 144
    assert weighted_turan(24, 6).mass() == 240
    assert weighted_turan(16, 8).mass() == 112 == F(7, 16) * 256
    assert weighted_turan(32, 8).mass() == 448
    six = weighted_turan(6, 6)
    assert all(six.weight(BLUE, i, j) + six.weight(RED, i, j) == 1 for i, j in combinations(range(6), 2))
    with pytest.raises(ValueError):
        weighted_turan(12, 7)


def test_weighted_turan_pattern():
    h = weighted_turan(8, 8)
    g8 = nice_coloring(3).matrix()
    assert all((h.weight(BLUE, i, j) == 1) == (g8[i][j] is BLUE) for i, j in combinations(range(8), 2))


def test_cluster_json_roundtrip():
    h = weighted_turan(12, 6)
    assert ClusterGraph.from_json(h.to_json()) == h


# ------------------------------------------------------------ edit distance

def test_edit_distance_examples():
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert edit_distance(k3, k3) == 0
    assert edit_distance(k3, Graph(3)) == 3
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    p5 = Graph(5, [(0, 2), (2, 4), (4, 1), (1, 3)])
    assert edit_distance(c5, p5, iso_minimize=True) == 1
    with pytest.raises(ValueError):
        edit_distance(k3, Graph(4))
    with pytest.raises(ValueError):
        edit_distance(Graph(11), Graph(11), iso_minimize=True)


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(0, 2 ** 32))
def test_edit_distance_matches_bruteforce(n, seed):
    rng = np.random.default_rng(seed)
    g1 = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
    g2 = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
    assert edit_distance(g1, g2, True) == edit_distance_bruteforce(g1, g2)
    assert edit_distance(g1, g2) == len(g1.edges ^ g2.edges)
