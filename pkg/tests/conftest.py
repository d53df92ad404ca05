import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

from rtw.model import BLUE, HALF, ONE, RED, ZERO, ColoredGraph, WCCG

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

colors = st.sampled_from([RED, BLUE])


@st.composite
def wccgs(draw, min_t=1, max_t=7, weights=(ZERO, HALF, ONE)):
    t = draw(st.integers(min_t, max_t))
    vc = draw(st.lists(colors, min_size=t, max_size=t))
    pairs = {}
    for i in range(t):
        for j in range(i + 1, t):
            pairs[(i, j)] = (draw(colors), draw(st.sampled_from(weights)))
    return WCCG.from_pairs(t, vc, pairs)


@st.composite
def colorings(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return ColoredGraph(n, [(i, j, draw(colors)) for i in range(n) for j in range(i + 1, n)])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
