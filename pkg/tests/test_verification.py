import json
from fractions import Fraction
from itertools import combinations

import pytest

import oracles
from rtw.genclique import has_generalized_K
from rtw.lagrangian import maximize_exact
from rtw.model import BLUE, HALF, ONE, RED
from rtw.verification import (GAMMA8_VARIANTS, T10_REFERENCE_MATRIX, SUITES, fact_t10_matrices, report_json,
                              report_table, rho36_extremal, rho37_extremal, run_suite)


def test_rho36_value_and_forbidden_cliques():
    W = rho36_extremal()
    r = maximize_exact(W)
    assert r.g_max == Fraction(5, 12) and r.interior
    assert oracles.genclique_max(W, BLUE) < 3 and oracles.genclique_max(W, RED) < 6
    assert oracles.lagrangian_max(W) == Fraction(5, 12)


def test_rho36_blue_edge_recolor_creates_red_k6():
    W = rho36_extremal()
    blue = [(i, j) for i, j, c, _ in W.pairs() if c is BLUE]
    assert len(blue) == 5 and all(j < 5 for _, j in blue)
    for i, j in blue:
        V = W.with_pair(i, j, color=RED)
        assert has_generalized_K(V, RED, 6)
        assert oracles.genclique_max(V, RED) >= 6


@pytest.mark.parametrize("variant", GAMMA8_VARIANTS)
def test_rho37_variants(variant):
    W = rho37_extremal(variant)
    assert all(v is RED for v in W.vertex_colors)
    assert all(w == ONE for _, _, _, w in W.pairs())
    assert maximize_exact(W).g_max == Fraction(7, 16)
    assert oracles.genclique_max(W, BLUE) < 3 and oracles.genclique_max(W, RED) < 7


def test_rho37_blue_edge_recolor_scan():
    # every recoloring that completes a red K4 must create a red generalized K7
    W = rho37_extremal("G8")
    for i, j, c, _ in W.pairs():
        if c is not BLUE:
            continue
        V = W.with_pair(i, j, color=RED)
        red_k4 = any(all(V.colors[a][b] is RED for a, b in combinations(S, 2))
                     for S in combinations(range(8), 4))
        if red_k4:
            assert has_generalized_K(V, RED, 7)


def test_t10_matrices():
    disjoint, variant, half_c4 = fact_t10_matrices()
    rows = [[Fraction(x) for x in r.split()] for r in T10_REFERENCE_MATRIX]
    assert [[disjoint.weights[i][j] if i != j else Fraction(0) for j in range(10)] for i in range(10)] == rows
    assert sum(w == HALF for _, _, _, w in variant.pairs()) == 4
    r2, rv, r3 = map(maximize_exact, (disjoint, variant, half_c4))
    assert abs(float(r2.two_g) - 0.8696) <= 5e-5
    assert abs(float(rv.two_g) - 0.8707) <= 5e-5
    assert r3.two_g == Fraction(7, 8) and not r3.interior
    assert all(0 not in s and 2 not in s for s in r3.kkt_supports)
    assert oracles.lagrangian_max(half_c4) == Fraction(7, 16)


def test_anchor_suite_passes():
    rep = run_suite("paper", 0)
    assert rep["passed"], report_table(rep)
    assert len(rep["checks"]) == len(SUITES["paper"])
    assert len({c["id"] for c in rep["checks"]}) == len(rep["checks"])
    assert report_table(rep).endswith("ALL PASS\n")
    _check_numbers(rep)


def test_fault_injection_fails_with_diff():
    rep = run_suite("paper", 0, faults=["corrupt_gamma8_prime"])
    assert not rep["passed"]
    bad = {c["id"]: c for c in rep["checks"] if not c["passed"]}
    assert "ramsey-enumeration" in bad
    diff = bad["ramsey-enumeration"]["measured"]["diff"]
    assert len(diff["missing_from_family"]) == 1 and diff["extra_in_family"] == []
    assert "FAILURES PRESENT" in report_table(rep)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def _check_numbers(rep):
    # every rational in a report carries both renderings
    seen = []

    def walk(x):
        if isinstance(x, dict):
            if "exact" in x:
                seen.append(x)
                assert set(x) == {"exact", "approx"}
                assert float(Fraction(x["exact"])) == x["approx"]
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(rep)
    assert len(seen) > 10


def test_properties_report_deterministic():
    a = report_json(run_suite("properties", 7))
    c = report_json(run_suite("properties", 7, threads=3))
    assert a == c
    assert json.loads(a)["passed"]
    assert report_json(run_suite("properties", 8)) != a
