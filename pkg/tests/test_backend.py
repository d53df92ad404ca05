import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from conftest import wccgs
from rtw import _backend

try:
    cy = _backend.kernels("cython")
except ImportError:  # extension not built in this environment
    cy = None
py = _backend.kernels("python")

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")


@st.composite
def adjacency(draw, max_n=40):
    n = draw(st.integers(0, max_n))
    p = draw(st.floats(0.1, 0.9))
    bits = draw(st.lists(st.floats(0, 1), min_size=n * n, max_size=n * n))
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if bits[i * n + j] < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


@needs_ext
@settings(max_examples=80)
@given(wccgs(max_t=9))
def test_kkt_scan_agrees(W):
    w2 = W.doubled_weights()
    assert py[0](w2, W.t) == cy[0](w2, W.t)


@needs_ext
@settings(max_examples=80)
@given(adjacency())
def test_max_clique_agrees(adj):
    assert py[1](adj) == cy[1](adj)


@needs_ext
@settings(max_examples=80)
@given(adjacency(), st.integers(1, 8))
def test_find_clique_agrees(adj, k):
    assert py[2](adj, k) == cy[2](adj, k)


@needs_ext
def test_wide_graph_agrees():
    # more than 64 vertices exercises the multi-word bitsets
    n = 150
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (i * 7 + j * 13) % 5 < 3:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    assert py[1](adj) == cy[1](adj)
    assert py[2](adj, 6) == cy[2](adj, 6)


def test_pure_env_forces_fallback():
    env = dict(os.environ, RTW_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from rtw import _backend; print(_backend.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_ext
def test_default_backend_is_compiled():
    if os.environ.get("RTW_PURE"):
        pytest.skip("pure backend forced")
    assert _backend.BACKEND == "cython"


def test_max_clique_small_cases():
    assert py[1]([]) == []
    assert py[1]([0, 0, 0]) == [0]
    tri = [0b110, 0b101, 0b011]
    assert py[1](tri) == [0, 1, 2]
    assert py[2](tri, 4) is None and py[2](tri, 2) == [0, 1]
