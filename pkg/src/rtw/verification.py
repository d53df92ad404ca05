"""Named extremal instances and the two reproducible check suites.

A suite is an ordered list of independent checks. Each check returns a
record with an id, a pass flag and measured values; exact rationals are
rendered as ``{"exact": "p/q", "approx": float}``. Reports contain no timings
so a fixed seed gives byte-identical output at any thread count.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Callable

import numpy as np

from .canon import canonical_form, wccg_canonical_form
from .constructions import (GBESpec, be_graph, check_be_graph, ConstructionError, edge_count_check,
                            gbe_graph, h_graph, independence_number, is_triangle_free,
                            pseudo_erdos_graph, u_graph)
from .genclique import brute_force_max, has_generalized_K, max_generalized_clique
from .lagrangian import (beta_search, build_w_structure, evaluate_g, half_degree_bound, join_full,
                         maximize_exact, maximize_iterative, vertex_deletion_bound_check,
                         w_structure_density_356, w_structure_density_37, weighted_degree)
from .model import (BLUE, HALF, ONE, RED, ZERO, ColoredGraph, EdgeColor, Graph,
                    GeneralizedCliqueWitness, WCCG, validate_witness)
from .ramsey import enumerate_ramsey, find_mono_clique, gamma8_family, is_ramsey_graph, nice_coloring
from .reduction import ClusterGraph, symmetrize, two_color_partition, weighted_turan

# ----------------------------------------------------------- named instances


def rho36_extremal() -> WCCG:
    """K_6: five red vertices colored like the pentagon, one blue vertex joined in red; all full."""
    pent = nice_coloring(2).matrix()
    pairs = {}
    for i in range(6):
        for j in range(i + 1, 6):
            pairs[(i, j)] = (pent[i][j] if j < 5 else RED, ONE)
    return WCCG.from_pairs(6, [RED] * 5 + [BLUE], pairs)


GAMMA8_VARIANTS = ("G8", "G8'", "G8''")


def rho37_extremal(variant: str | int = "G8") -> WCCG:
    """All-red full K_8 whose edge colors follow one of the three (4,3)-Ramsey colorings."""
    idx = GAMMA8_VARIANTS.index(variant) if isinstance(variant, str) else int(variant)
    return WCCG.from_coloring(gamma8_family()[idx], ONE, [RED] * 8)


# Three disjoint half edges plus the half edge 06, written out row by row; the assembly below must reproduce it.
T10_REFERENCE_MATRIX = (
    "0 1/2 1 1 1 1 1/2 1 1 1",
    "1/2 0 1 1 1 1 1 1 1 1",
    "1 1 0 1/2 1 1 1 1 1 1",
    "1 1 1/2 0 1 1 1 1 1 1",
    "1 1 1 1 0 1/2 1 1 1 1",
    "1 1 1 1 1/2 0 1 1 1 1",
    "1/2 1 1 1 1 1 0 1 1 1",
    "1 1 1 1 1 1 1 0 1 1",
    "1 1 1 1 1 1 1 1 0 1",
    "1 1 1 1 1 1 1 1 1 0",
)


def _from_rows(rows) -> WCCG:
    mat = [[Fraction(x) for x in r.split()] for r in rows]
    t = len(mat)
    return WCCG.from_pairs(t, [RED] * t, {(i, j): (RED, mat[i][j])
                                          for i in range(t) for j in range(i + 1, t)})


def _half_edges(t: int, half) -> WCCG:
    hs = {(min(a, b), max(a, b)) for a, b in half}
    return WCCG.from_pairs(t, [RED] * t, {(i, j): (RED, HALF if (i, j) in hs else ONE)
                                          for i in range(t) for j in range(i + 1, t)})


def fact_t10_matrices() -> list[WCCG]:
    """Three all-red K_10 weightings.

    0: three independent half edges 01, 23, 45 plus the half edge 06.
    1: the same three plus the half edge 02, which meets {0, 1, 2, 3} twice.
    2: a half 4-cycle 0-1-2-3 plus the half edge 04.
    """
    disjoint_halves = _half_edges(10, [(0, 1), (2, 3), (4, 5), (0, 6)])
    if disjoint_halves != _from_rows(T10_REFERENCE_MATRIX):
        raise AssertionError("assembled weighting differs from the reference matrix")
    variant = _half_edges(10, [(0, 1), (2, 3), (4, 5), (0, 2)])
    half_c4 = _half_edges(10, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    return [disjoint_halves, variant, half_c4]


# ------------------------------------------------------------------ helpers

def num(x: Fraction) -> dict:
    x = Fraction(x)
    return {"exact": str(x), "approx": float(x)}


def sub_rng(seed: int, key: int) -> np.random.Generator:
    """Independent stream for check ``key`` of a suite run with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, key])))


def random_wccg(rng: np.random.Generator, t: int, weights=(ZERO, HALF, ONE)) -> WCCG:
    pairs = {}
    for i in range(t):
        for j in range(i + 1, t):
            c = RED if rng.integers(2) else BLUE
            pairs[(i, j)] = (c, weights[int(rng.integers(len(weights)))])
    vc = [RED if rng.integers(2) else BLUE for _ in range(t)]
    return WCCG.from_pairs(t, vc, pairs)


def _record(cid: str, desc: str, passed: bool, **measured) -> dict:
    return {"id": cid, "description": desc, "passed": bool(passed), "measured": measured}


# ------------------------------------------------------------- anchor suite

def _faulty_gamma8(faults) -> list[ColoredGraph]:
    fam = gamma8_family()
    if "corrupt_gamma8_prime" in faults:
        # a second copy of Gamma_8 in place of the one-edge recoloring
        fam[1] = nice_coloring(3)
    return fam


def p_lagrangian_anchors(seed, faults) -> dict:
    c5 = maximize_exact(build_w_structure(5, {"C5": 1}))
    c5_ok = (c5.two_g == Fraction(3, 5) and c5.interior
             and all(x == Fraction(1, 5) for x in c5.witness.u))
    kt_ok = True
    for t in range(2, 11):
        r = maximize_exact(WCCG.uniform(t))
        kt_ok &= r.two_g == 1 - Fraction(1, t) and all(x == Fraction(1, t) for x in r.witness.u)
    return _record("lagrangian-anchors", "half C5 gives 3/5; full K_t gives 1 - 1/t for t = 2..10",
                   c5_ok and kt_ok, half_c5=num(c5.two_g), full_kt=kt_ok)


def p_fact_matrices(seed, faults) -> dict:
    disjoint, var, half_c4 = fact_t10_matrices()
    r2, rv, r3 = maximize_exact(disjoint), maximize_exact(var), maximize_exact(half_c4)
    ok2 = abs(float(r2.two_g) - 0.8696) <= 5e-5
    okv = abs(float(rv.two_g) - 0.8707) <= 5e-5
    zero13 = all(0 not in s and 2 not in s for s in r3.kkt_supports)
    ok3 = r3.two_g == Fraction(7, 8) and zero13 and not r3.interior
    expected_u = tuple([ZERO, Fraction(1, 8), ZERO] + [Fraction(1, 8)] * 7)
    return _record("t10-matrices", "reference matrix ~0.8696, variant ~0.8707, half C4 case = 7/8 on the boundary",
                   ok2 and okv and ok3 and r3.witness.u == expected_u,
                   disjoint_halves=num(r2.two_g), variant=num(rv.two_g), half_c4=num(r3.two_g),
                   half_c4_supports=[list(s) for s in r3.kkt_supports],
                   half_c4_interior=r3.interior)


def p_closed_forms(seed, faults) -> dict:
    rows = [
        ("356", (6, 0, 0, 0, 0), Fraction(5, 6)),
        ("356", (9, 0, 1, 0, 1), Fraction(74, 89)),
        ("356", (7, 0, 0, 0, 2), Fraction(14, 17)),
        ("37", (12, 1, 0, 0, 0, 0, 0, 0), Fraction(7, 8)),
        ("37", (14, 0, 1, 0, 0, 0, 2, 1), Fraction(6, 7)),
        ("37", (10, 0, 0, 0, 0, 0, 0, 0), Fraction(9, 10)),
    ]
    out, ok = [], True
    for kind, args, want in rows:
        if kind == "356":
            got = w_structure_density_356(*args)
            t, p, q, r, s = args
            counts = {"C5": p, "K4": q, "K3": r, "K2": s}
        else:
            got = w_structure_density_37(*args)
            t = args[0]
            counts = dict(zip(("C8", "K5", "C5", "K4", "C4", "K3", "K2"), args[1:]))
        solved = maximize_exact(build_w_structure(t, counts)).two_g
        ok &= got == want == solved
        out.append({"formula": kind, "args": list(args), "value": num(got), "solver": num(solved)})
    hb = [half_degree_bound(12, 2), half_degree_bound(16, 2), half_degree_bound(13, 3)]
    ok &= hb == [Fraction(5, 6), Fraction(7, 8), Fraction(21, 26)]
    return _record("closed-forms", "closed-form densities and half-degree bound match expected values and the exact solver",
                   ok, rows=out, half_degree=[num(x) for x in hb])


def p_ramsey(seed, faults) -> dict:
    counts = {}
    classes = {}
    for n, p, q in ((5, 3, 3), (6, 3, 3), (8, 4, 3), (9, 4, 3)):
        found = enumerate_ramsey(n, p, q)
        counts[f"{n},{p},{q}"] = len(found)
        classes[(n, p, q)] = {c.key for c in found}
    pent_ok = classes[(5, 3, 3)] == {canonical_form(nice_coloring(2))}
    fam = _faulty_gamma8(faults)
    fam_keys = [canonical_form(g) for g in fam]
    enum_keys = classes[(8, 4, 3)]
    diff = {"missing_from_family": sorted(k.hex() for k in enum_keys - set(fam_keys)),
            "extra_in_family": sorted(k.hex() for k in set(fam_keys) - enum_keys)}
    family_ok = (len(set(fam_keys)) == 3 and set(fam_keys) == enum_keys
            and all(is_ramsey_graph(g, 4, 3) for g in fam))
    blue = [len(g.color_graph(BLUE).edges) for g in fam]
    ok = (counts == {"5,3,3": 1, "6,3,3": 0, "8,4,3": 3, "9,4,3": 0} and pent_ok and family_ok
          and blue == [12, 11, 10])
    return _record("ramsey-enumeration", "class counts 1, 0, 3, 0 and the three (4,3) colorings match the named family",
                   ok, counts=counts, pentagon=pent_ok, family_matches=family_ok, family_blue_edges=blue, diff=diff)


def p_extremal(seed, faults) -> dict:
    W = rho36_extremal()
    r = maximize_exact(W)
    ok36 = (r.g_max == Fraction(5, 12) and r.interior and not has_generalized_K(W, BLUE, 3)
            and not has_generalized_K(W, RED, 6))
    flips = []
    for i, j, c, _ in W.pairs():
        if j < 5 and c is BLUE:
            flips.append(has_generalized_K(W.with_pair(i, j, color=RED), RED, 6))
    ok36 &= len(flips) == 5 and all(flips)
    sizes36 = (max_generalized_clique(W, RED).size, max_generalized_clique(W, BLUE).size)
    res37 = []
    ok37 = True
    for k, g in enumerate(_faulty_gamma8(faults)):
        W8 = WCCG.from_coloring(g, ONE, [RED] * 8)
        r8 = maximize_exact(W8)
        good = (r8.g_max == Fraction(7, 16) and not has_generalized_K(W8, BLUE, 3)
                and not has_generalized_K(W8, RED, 7))
        ok37 &= good
        res37.append({"variant": GAMMA8_VARIANTS[k], "g": num(r8.g_max), "ok": good})
    g8 = rho37_extremal("G8")
    sizes8 = (max_generalized_clique(g8, RED).size, max_generalized_clique(g8, BLUE).size)
    ok = ok36 and ok37 and sizes36 == (5, 2) and sizes8 == (6, 2)
    return _record("extremal-instances", "rho(3,6) and rho(3,7) extremal weightings: values and forbidden generalized cliques",
                   ok, rho36_g=num(r.g_max), rho36_flips=flips, rho36_sizes=list(sizes36),
                   rho37=res37, gamma8_sizes=list(sizes8))


def p_beta(seed, faults) -> dict:
    b3 = beta_search(3, 3, 3)
    b6 = beta_search(3, 6, 6)
    wit3 = b3.witness
    ok3 = (b3.two_g == Fraction(1, 2) and wit3 is not None and wit3.t == 2
           and wit3.vertex_colors == (BLUE, BLUE) and wit3.colors[0][1] is RED and wit3.weights[0][1] == ONE)
    swapped = None
    if b6.witness is not None:
        W = b6.witness
        swapped = WCCG(W.t, tuple(c.other for c in W.vertex_colors),
                       tuple(tuple(None if c is None else c.other for c in row) for row in W.colors),
                       W.weights)
    ok6 = (b6.two_g == Fraction(5, 6) and swapped is not None
           and wccg_canonical_form(swapped) == wccg_canonical_form(rho36_extremal()))
    return _record("beta-search", "exhaustive weighted Ramsey search: beta(3,3) = 1/2, beta(3,6) = 5/6",
                   ok3 and ok6, beta33=num(b3.two_g), beta36=num(b6.two_g),
                   beta36_matches_rho36_after_color_swap=ok6)


def p_weighted_turan(seed, faults) -> dict:
    masses = {f"F({m},6)": weighted_turan(m, 6).mass() for m in (12, 24)}
    masses.update({f"F({m},8)": weighted_turan(m, 8).mass() for m in (16, 32)})
    want = {"F(12,6)": Fraction(5, 12) * 144, "F(24,6)": Fraction(5, 12) * 576,
            "F(16,8)": Fraction(7, 16) * 256, "F(32,8)": Fraction(7, 16) * 1024}
    return _record("weighted-turan", "weighted Turan masses equal 5/12 m^2 and 7/16 m^2",
                   masses == want, **{k: num(v) for k, v in masses.items()})


def p_constructions(seed, faults) -> dict:
    U = u_graph(60, 3, 3, seed=seed)
    H = h_graph(60, 3, 3, seed=seed)
    u_ok = find_mono_clique(U, BLUE, 3) is None and find_mono_clique(U, RED, 5) is None
    h_ok = find_mono_clique(H, BLUE, 3) is None and find_mono_clique(H, RED, 6) is None
    sg = be_graph(200, 20, 0.1, seed)
    try:
        check_be_graph(sg)
        be_ok = True
    except ConstructionError:
        be_ok = False
    base = rho36_extremal()
    g = gbe_graph(GBESpec(base, (150,) * 6, 20, 0.3, seed))
    gbe_ok = find_mono_clique(g, BLUE, 3) is None and find_mono_clique(g, RED, 6) is None
    mutated = base.with_pair(0, 2, color=RED)
    found = find_mono_clique(gbe_graph(GBESpec(mutated, (150,) * 6, 20, 0.3, seed)), RED, 6)
    return _record("constructions", "U(60,3,3), H(60,3,3), BE(200,20,0.1) and GBE instances avoid the forbidden cliques",
                   u_ok and h_ok and be_ok and gbe_ok and found is not None,
                   u_graph=u_ok, h_graph=h_ok, be_graph=be_ok, gbe=gbe_ok,
                   mutated_red_k6=found)


def p_solver_crosscheck(seed, faults) -> dict:
    insts = [build_w_structure(5, {"C5": 1}), rho36_extremal(), rho37_extremal("G8''")]
    insts += fact_t10_matrices()
    insts.append(build_w_structure(12, {"C8": 1}))
    worst = Fraction(0)
    for W in insts:
        ex = maximize_exact(W).two_g
        it = maximize_iterative(W).two_g
        worst = max(worst, abs(Fraction(it) - ex))
    return _record("solver-crosscheck", "iterative and exact maxima agree within 1e-6 on suite instances",
                   worst <= Fraction(1, 10 ** 6), max_abs_diff=float(worst))


ANCHOR_CHECKS: list[Callable] = [
    p_lagrangian_anchors, p_fact_matrices, p_closed_forms, p_ramsey, p_extremal, p_beta,
    p_weighted_turan, p_constructions, p_solver_crosscheck,
]


# ---------------------------------------------------------- property suite

def feasible_356(t_max: int = 10):
    for t in range(2, t_max + 1):
        for p in range(t // 5 + 1):
            for q in range((t - 5 * p) // 4 + 1):
                for r in range((t - 5 * p - 4 * q) // 3 + 1):
                    for s in range((t - 5 * p - 4 * q - 3 * r) // 2 + 1):
                        yield t, p, q, r, s


def feasible_37(t_max: int = 12):
    sizes = (8, 5, 5, 4, 4, 3, 2)

    def rec(k, left, acc):
        if k == len(sizes):
            yield tuple(acc)
            return
        for c in range(left // sizes[k] + 1):
            yield from rec(k + 1, left - c * sizes[k], acc + [c])

    for t in range(2, t_max + 1):
        for ls in rec(0, t, []):
            yield (t,) + ls


def q_closed_form(seed, faults) -> dict:
    rng = sub_rng(seed, 1)
    s356 = list(feasible_356(10))
    s37 = list(feasible_37(12))
    pick = [s37[int(i)] for i in rng.choice(len(s37), size=min(150, len(s37)), replace=False)]
    bad = []
    for t, p, q, r, s in s356:
        got = maximize_exact(build_w_structure(t, {"C5": p, "K4": q, "K3": r, "K2": s})).two_g
        if got != w_structure_density_356(t, p, q, r, s):
            bad.append([t, p, q, r, s])
    for spec in sorted(pick):
        t, ls = spec[0], spec[1:]
        counts = dict(zip(("C8", "K5", "C5", "K4", "C4", "K3", "K2"), ls))
        if maximize_exact(build_w_structure(t, counts)).two_g != w_structure_density_37(t, *ls):
            bad.append(list(spec))
    return _record("closed-form-equivalence", "exact solver equals both closed forms on every checked packing",
                   not bad, specs=len(s356) + len(pick), failures=bad)


def q_equal_degree(seed, faults) -> dict:
    rng = sub_rng(seed, 2)
    found = failures = tried = 0
    while found < 300:
        tried += 1
        W = random_wccg(rng, int(rng.integers(2, 9)))
        r = maximize_exact(W)
        if not r.interior:
            continue
        found += 1
        degs = {weighted_degree(W, r.witness, x) for x in range(W.t)}
        if len(degs) != 1 or r.g_max != next(iter(degs)) / (2 * W.t):
            failures += 1
    return _record("equal-weighted-degree", "interior maximizers have equal weighted degrees and g = d/(2t)",
                   failures == 0, interior_instances=found, sampled=tried, failures=failures)


def q_bounds(seed, faults) -> dict:
    rng = sub_rng(seed, 3)
    lam_fail = lam_n = dense_skipped = 0
    while lam_n < 200:
        t = int(rng.integers(3, 9))
        W = random_wccg(rng, t, (HALF, ONE))
        lam = min(sum(1 for y in range(t) if W.weights[x][y] == HALF) for x in range(t))
        r = maximize_exact(W)
        if not r.dense:
            dense_skipped += 1
            continue
        lam_n += 1
        if r.two_g > half_degree_bound(t, lam):
            lam_fail += 1
    del_fail = 0
    for _ in range(200):
        W = random_wccg(rng, int(rng.integers(2, 9)))
        x = int(rng.integers(W.t))
        sub = maximize_exact(W.delete_vertex(x)).g_max
        k = 1
        while sub > Fraction(k - 1, 2 * k):
            k += 1
        if not vertex_deletion_bound_check(W, x, k):
            del_fail += 1
    return _record("bound-properties", "half-edge bound on dense instances and the vertex-deletion bound",
                   lam_fail == 0 and del_fail == 0, half_edge_instances=lam_n,
                   non_dense_skipped=dense_skipped, half_edge_failures=lam_fail,
                   deletion_instances=200, deletion_failures=del_fail)


def random_dense(rng, t_max: int = 5) -> WCCG:
    while True:
        W = random_wccg(rng, int(rng.integers(1, t_max + 1)), (HALF, ONE))
        if maximize_exact(W).dense:
            return W


def q_dense_join(seed, faults) -> dict:
    rng = sub_rng(seed, 4)
    dense = mono = 0
    for _ in range(50):
        A, B = random_dense(rng), random_dense(rng)
        J = join_full(A, B)
        rj = maximize_exact(J)
        dense += rj.dense
        mono += rj.g_max >= max(maximize_exact(A).g_max, maximize_exact(B).g_max)
    return _record("dense-join", "joining two dense weightings by full edges stays dense",
                   dense == 50 and mono == 50, dense=dense, trials=50, monotone=mono)


def q_half_monotone(seed, faults) -> dict:
    rng = sub_rng(seed, 5)
    bad = 0
    for _ in range(100):
        W = random_wccg(rng, int(rng.integers(2, 9)), (HALF, ONE))
        halves = [(i, j) for i, j, _, w in W.pairs() if w == HALF]
        if not halves:
            continue
        i, j = halves[int(rng.integers(len(halves)))]
        if maximize_exact(W.with_pair(i, j, weight=ONE)).g_max < maximize_exact(W).g_max:
            bad += 1
    return _record("half-to-full-monotone", "replacing a half edge by a full edge never lowers g",
                   bad == 0, failures=bad)


def random_colored_graph(rng, n: int, p_edge: float, p_blue: float) -> ColoredGraph:
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p_edge:
                edges.append((i, j, BLUE if rng.random() < p_blue else RED))
    return ColoredGraph(n, edges)


def q_partition(seed, faults) -> dict:
    rng = sub_rng(seed, 6)
    rows = []
    ok = True
    for _ in range(20):
        n = int(rng.integers(20, 41))
        g = random_colored_graph(rng, n, float(rng.uniform(0.75, 0.9)), float(rng.uniform(0.1, 0.5)))
        alpha, _ = independence_number(g.underlying())
        delta = Fraction(alpha, n)
        res = two_color_partition(g, delta)
        lim = delta * n * n
        good = (res.alpha1 ** 2 <= lim and res.alpha2 ** 2 <= lim
                and sorted(res.U1 + res.U2) == list(range(n))
                and res.extractions ** 2 * delta <= 1)
        ok &= good
        rows.append([n, str(delta), res.extractions, res.alpha1, res.alpha2])
    return _record("two-color-partition", "alpha of color k on U_k is at most sqrt(delta) n, verified exactly",
                   ok, instances=rows)


def random_cluster(rng, m: int) -> ClusterGraph:
    """F_{m,6} with noise: some pairs zeroed, some halved, some recolored."""
    base = weighted_turan(m, 6)
    entries = {}
    for i in range(m):
        for j in range(i + 1, m):
            wb, wr = base.w[0][i][j], base.w[1][i][j]
            x = rng.random()
            if x < 0.15:
                wb, wr = ZERO, ZERO
            elif x < 0.3:
                wb, wr = wb / 2, wr / 2
            elif x < 0.4:
                wb, wr = HALF, HALF
            elif x < 0.5:
                wb, wr = wr, wb
            entries[(i, j)] = (wb, wr)
    vc = [RED if rng.random() < 0.7 else BLUE for _ in range(m)]
    return ClusterGraph.build(m, vc, entries)


def q_symmetrize(seed, faults) -> dict:
    rng = sub_rng(seed, 7)
    rows = []
    ok = True
    for _ in range(20):
        h = random_cluster(rng, int(rng.integers(6, 13)))
        rep = symmetrize(h)
        mono = all(b >= a for a, b in zip(rep.masses, rep.masses[1:]))
        q = rep.quotient
        before = (h.genclique_size(RED), h.genclique_size(BLUE))
        after = (max_generalized_clique(q, RED).size, max_generalized_clique(q, BLUE).size)
        mid = (rep.final.genclique_size(RED), rep.final.genclique_size(BLUE))
        good = mono and after[0] <= before[0] and after[1] <= before[1] and mid[0] <= before[0] and mid[1] <= before[1]
        ok &= good
        rows.append({"m": h.m, "t": q.t, "mass": [str(rep.masses[0]), str(rep.masses[-1])],
                     "genclique_before": list(before), "genclique_after": list(after)})
    return _record("symmetrize", "symmetrization never lowers mass and never raises generalized clique sizes",
                   ok, instances=rows)


def q_canonical(seed, faults) -> dict:
    rng = sub_rng(seed, 8)
    bad = 0
    for _ in range(100):
        n = int(rng.integers(2, 10))
        c = random_colored_graph(rng, n, 1.0, float(rng.uniform(0.2, 0.8)))
        perm = [int(x) for x in rng.permutation(n)]
        bad += canonical_form(c) != canonical_form(c.permuted(perm))
    raw_ok = all({x.key for x in enumerate_ramsey(n, p, q, prune=False)}
                 == {x.key for x in enumerate_ramsey(n, p, q)}
                 for n in range(1, 7) for p, q in ((3, 3), (3, 4), (4, 3)))
    swap_ok = all({canonical_form(x.graph.swap_colors()) for x in enumerate_ramsey(n, 4, 3)}
                  == {x.key for x in enumerate_ramsey(n, 3, 4)} for n in range(1, 9))
    return _record("canonical-and-enumeration", "canonical forms are relabelling-invariant; pruned and raw enumeration agree; color swap is a bijection",
                   bad == 0 and raw_ok and swap_ok, permutation_failures=bad,
                   raw_matches_pruned=raw_ok, color_swap=swap_ok)


def q_genclique(seed, faults) -> dict:
    rng = sub_rng(seed, 9)
    bad = 0
    for _ in range(100):
        W = random_wccg(rng, int(rng.integers(1, 8)))
        for c in (RED, BLUE):
            wit = max_generalized_clique(W, c)
            if not validate_witness(W, wit) or wit.size != brute_force_max(W, c):
                bad += 1
    # every red K_5 is all-half when all vertices are red and no red generalized K_7 exists
    k5_bad = k5_seen = 0
    for _ in range(300):
        W = random_wccg(rng, int(rng.integers(5, 9)), (HALF, ONE))
        # plant a red K_5 on a random 5-set, all half with probability 1/2
        S = [int(x) for x in rng.choice(W.t, 5, replace=False)]
        all_half = bool(rng.integers(2))
        for a, b in combinations(sorted(S), 2):
            W = W.with_pair(a, b, RED, HALF if all_half or rng.integers(4) else ONE)
        W = WCCG(W.t, (RED,) * W.t, W.colors, W.weights)
        if has_generalized_K(W, RED, 7):
            continue
        for S in combinations(range(W.t), 5):
            if all(W.colors[a][b] is RED for a, b in combinations(S, 2)):
                k5_seen += 1
                k5_bad += any(W.weights[a][b] != HALF for a, b in combinations(S, 2))
    return _record("generalized-cliques", "search matches brute force; red K5 under no red generalized K7 is all half",
                   bad == 0 and k5_bad == 0, failures=bad, red_k5_checked=k5_seen, red_k5_failures=k5_bad)


def q_solver(seed, faults) -> dict:
    rng = sub_rng(seed, 10)
    worst = 0.0
    for _ in range(30):
        W = random_wccg(rng, int(rng.integers(2, 13)))
        ex = float(maximize_exact(W).two_g)
        it = maximize_iterative(W).two_g
        worst = max(worst, abs(it - ex))
    return _record("solver-crosscheck-random", "iterative ascent reaches the exact maximum within 1e-6",
                   worst <= 1e-6, max_abs_diff=worst)


def q_constructions(seed, faults) -> dict:
    ok = True
    alphas = []
    for k in range(5):
        g = pseudo_erdos_graph(40, seed + k)
        ok &= is_triangle_free(g)
        alphas.append(independence_number(g)[0])
    U = u_graph(40, 3, 3, seed=seed)
    ok &= find_mono_clique(U, BLUE, 3) is None and find_mono_clique(U, RED, 5) is None
    spec = GBESpec(WCCG.uniform(4), (50,) * 4, 20, 0.3, seed)
    err = edge_count_check(gbe_graph(spec), spec)
    ok &= err < 0.02
    return _record("construction-invariants", "seeded constructions pass their defining checks",
                   ok, pseudo_erdos_alpha=alphas, full_join_edge_error=err)


PROPERTY_CHECKS: list[Callable] = [
    q_closed_form, q_equal_degree, q_bounds, q_dense_join, q_half_monotone, q_partition,
    q_symmetrize, q_canonical, q_genclique, q_solver, q_constructions,
]

SUITES = {"paper": ANCHOR_CHECKS, "properties": PROPERTY_CHECKS}


def _run_one(args) -> dict:
    suite, index, seed, faults = args
    return SUITES[suite][index](seed, frozenset(faults))


def run_suite(name: str = "paper", seed: int = 0, threads: int = 1, faults=()) -> dict:
    """Run every check of a suite and return the ordered report.

    ``faults`` names deliberate corruptions (``corrupt_gamma8_prime``) used to
    prove that checks can fail.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    jobs = [(name, i, seed, tuple(sorted(faults))) for i in range(len(SUITES[name]))]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    return {"suite": name, "seed": seed, "passed": all(r["passed"] for r in results),
            "checks": results}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def report_table(report: dict) -> str:
    lines = [f"suite {report['suite']} seed {report['seed']}"]
    for r in report["checks"]:
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'}  {r['id']:<28} {r['description']}")
    lines.append("ALL PASS" if report["passed"] else "FAILURES PRESENT")
    return "\n".join(lines) + "\n"
