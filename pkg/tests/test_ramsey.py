from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import colorings, wccgs
from rtw.canon import canonical_form, canonical_relabel, canonical_string, wccg_canonical_form
from rtw.model import BLUE, RED, ColoredGraph, ModelError, WCCG
from rtw.ramsey import (MAX_ENUM_N, cayley_coloring, enumerate_ramsey, find_mono_clique, gamma8_family,
                        is_ramsey_graph, nice_coloring)


@given(colorings(max_n=8), st.data())
def test_canonical_form_is_permutation_invariant(c, data):
    perm = data.draw(st.permutations(list(range(c.n))))
    assert canonical_form(c) == canonical_form(c.permuted(perm))


@settings(max_examples=40)
@given(colorings(min_n=2, max_n=5), colorings(min_n=2, max_n=5))
def test_canonical_form_separates_classes(a, b):
    assert (canonical_form(a) == canonical_form(b)) == oracles.isomorphic(a, b)


@given(colorings(max_n=7))
def test_canonical_relabel_is_isomorphic_representative(c):
    r = canonical_relabel(c)
    assert canonical_form(r) == canonical_form(c)
    assert canonical_relabel(r) == r


@given(wccgs(max_t=6), st.data())
def test_wccg_form_is_permutation_invariant(W, data):
    perm = data.draw(st.permutations(list(range(W.t))))
    inv = [0] * W.t
    for a, b in enumerate(perm):
        inv[b] = a
    P = WCCG.from_pairs(W.t, [W.vertex_colors[inv[v]] for v in range(W.t)],
                        {(perm[i], perm[j]) if perm[i] < perm[j] else (perm[j], perm[i]): (c, w)
                         for i, j, c, w in W.pairs()})
    assert wccg_canonical_form(P) == wccg_canonical_form(W)


def test_canonical_string_regular_graph():
    # Petersen graph: vertex-transitive, exercises automorphism pruning
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    sym = [[0] * 10 for _ in range(10)]
    for a, b in outer + spokes + inner:
        sym[a][b] = sym[b][a] = 1
    s, order = canonical_string([0] * 10, sym)
    assert sorted(order) == list(range(10))
    assert s.count(1) == 15


def test_incomplete_rejected():
    with pytest.raises(ModelError):
        canonical_form(ColoredGraph(3, [(0, 1, RED)]))
    with pytest.raises(ModelError):
        is_ramsey_graph(ColoredGraph(3, [(0, 1, RED)]), 3, 3)


def test_pentagon_rotations_share_form():
    c = nice_coloring(2)
    rot = c.permuted([1, 2, 3, 4, 0])
    swapped_rot = c.swap_colors().permuted([0, 2, 4, 1, 3])
    assert canonical_form(c) == canonical_form(rot) == canonical_form(swapped_rot)


def test_gamma8_family():
    fam = gamma8_family()
    assert fam[0] == nice_coloring(3)
    assert [len(f.color_graph(BLUE).edges) for f in fam] == [12, 11, 10]
    assert all(is_ramsey_graph(f, 4, 3) for f in fam)
    assert len({canonical_form(f) for f in fam}) == 3
    assert {canonical_form(f) for f in fam} == {c.key for c in enumerate_ramsey(8, 4, 3)}


def test_nice_coloring():
    assert canonical_form(nice_coloring(2)) == enumerate_ramsey(5, 3, 3)[0].key
    for k in (2, 3, 4):
        blue = nice_coloring(k).adjacency(BLUE)
        assert all(bin(m).count("1") == k for m in blue)
    with pytest.raises(ValueError):
        nice_coloring(1)


def test_cayley_coloring():
    assert cayley_coloring(5, [2, 3]) == nice_coloring(2)
    with pytest.raises(ValueError):
        cayley_coloring(5, [1])
    with pytest.raises(ValueError):
        cayley_coloring(5, [0])


@pytest.mark.parametrize("n,p,q,count", [(5, 3, 3, 1), (6, 3, 3, 0), (8, 4, 3, 3), (9, 4, 3, 0)])
def test_enumeration_counts(n, p, q, count):
    classes = enumerate_ramsey(n, p, q)
    assert len(classes) == count
    assert all(is_ramsey_graph(c.graph, p, q) for c in classes)
    assert [c.key for c in classes] == sorted(c.key for c in classes)


def test_enumeration_matches_bruteforce_small():
    for n, p, q in ((4, 3, 3), (5, 3, 3), (5, 4, 3), (4, 4, 2)):
        brute = {canonical_form(c) for c in oracles.ramsey_classes(n, p, q)}
        assert {c.key for c in enumerate_ramsey(n, p, q)} == brute


def test_every_k6_coloring_has_mono_triangle():
    pairs = list(combinations(range(6), 2))
    for bits in product((RED, BLUE), repeat=len(pairs)):
        c = ColoredGraph(6, [(i, j, col) for (i, j), col in zip(pairs, bits)])
        assert not is_ramsey_graph(c, 3, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_raw_and_pruned_agree(n):
    for p, q in ((3, 3), (3, 4), (4, 3)):
        a = [c.key for c in enumerate_ramsey(n, p, q)]
        b = [c.key for c in enumerate_ramsey(n, p, q, prune=False)]
        assert a == b


def test_color_swap_bijection():
    for n, p, q in ((5, 3, 3), (7, 4, 3), (8, 4, 3)):
        a = {canonical_form(c.graph.swap_colors()) for c in enumerate_ramsey(n, p, q)}
        assert a == {c.key for c in enumerate_ramsey(n, q, p)}


def test_empty_iff_at_least_ramsey_number():
    for p, q, r in ((3, 3, 6), (3, 4, 9)):
        for n in range(1, 10):
            assert (not enumerate_ramsey(n, p, q)) == (n >= r)


def test_budget_and_trivial_cases():
    with pytest.raises(ValueError):
        enumerate_ramsey(MAX_ENUM_N + 1, 4, 3)
    assert len(enumerate_ramsey(0, 3, 3)) == 1
    assert enumerate_ramsey(3, 1, 3) == []


def test_find_mono_clique():
    red5 = ColoredGraph(5, [(i, j, RED) for i, j in combinations(range(5), 2)])
    assert find_mono_clique(red5, RED, 5) == [0, 1, 2, 3, 4]
    p = nice_coloring(2)
    assert find_mono_clique(p, RED, 3) is None and find_mono_clique(p, BLUE, 3) is None
    assert not is_ramsey_graph(ColoredGraph(4, [(i, j, RED) for i, j in combinations(range(4), 2)]), 4, 9)


@given(colorings(max_n=7), st.integers(1, 5))
def test_find_mono_clique_matches_bruteforce(c, ell):
    for col in (RED, BLUE):
        got = find_mono_clique(c, col, ell)
        assert (got is not None) == oracles.has_mono_clique(c, col, ell)
        if got is not None:
            assert all(c.matrix()[a][b] is col for a, b in combinations(got, 2))
