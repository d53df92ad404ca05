"""Two-colorings of K_n with no red K_p and no blue K_q, and the named colorings."""
from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .canon import canonical_form, canonical_relabel
from .model import BLUE, RED, ColoredGraph, EdgeColor, ModelError

MAX_ENUM_N = 9


@dataclass(frozen=True)
class CanonicalColoring:
    n: int
    key: bytes
    graph: ColoredGraph

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["canonical"] = self.key.hex()
        return out


def find_mono_clique(c: ColoredGraph, color, ell: int) -> list[int] | None:
    """Lexicographically smallest ``ell``-clique in one color, or None."""
    color = EdgeColor.parse(color)
    if ell <= 0:
        return []
    if ell > c.n:
        return None
    return _backend.find_clique(c.adjacency(color), ell)


def is_ramsey_graph(c: ColoredGraph, p: int, q: int) -> bool:
    """No red K_p and no blue K_q."""
    if not c.is_complete():
        raise ModelError("is_ramsey_graph needs a complete coloring")
    return find_mono_clique(c, RED, p) is None and find_mono_clique(c, BLUE, q) is None


def _has_clique_through(adj: list[int], v: int, k: int) -> bool:
    # a k-clique containing v is v plus a (k-1)-clique inside N(v)
    if k <= 1:
        return True
    nb = adj[v]
    verts = [u for u in range(len(adj)) if nb >> u & 1]
    if len(verts) < k - 1:
        return False
    pos = {u: i for i, u in enumerate(verts)}
    sub = [0] * len(verts)
    for u in verts:
        m = adj[u] & nb
        while m:
            low = m & -m
            sub[pos[u]] |= 1 << pos[low.bit_length() - 1]
            m ^= low
    return _backend.find_clique(sub, k - 1) is not None


def _extend(red: list[int], blue: list[int], p: int, q: int):
    """Every way to attach one new vertex to a Ramsey coloring."""
    n = len(red)
    for bits in range(1 << n):
        r = red + [0]
        b = blue + [0]
        for u in range(n):
            if bits >> u & 1:
                r[u] |= 1 << n
                r[n] |= 1 << u
            else:
                b[u] |= 1 << n
                b[n] |= 1 << u
        if _has_clique_through(r, n, p) or _has_clique_through(b, n, q):
            continue
        yield r, b


def _to_coloring(red: list[int]) -> ColoredGraph:
    n = len(red)
    return ColoredGraph(n, [(i, j, RED if red[i] >> j & 1 else BLUE)
                            for i in range(n) for j in range(i + 1, n)])


def enumerate_ramsey(n: int, p: int, q: int, prune: bool = True) -> list[CanonicalColoring]:
    """All isomorphism classes of Ramsey colorings of K_n, sorted by canonical string.

    With ``prune`` the search adds one vertex at a time and keeps one
    representative per class at every level. Without it, every labelled
    coloring is generated edge by edge (only monochromatic cliques prune) and
    classes are collected at the end; that mode is for cross-checking small n.
    """
    if n < 0 or p < 1 or q < 1:
        raise ValueError("need n >= 0 and p, q >= 1")
    if n > MAX_ENUM_N:
        raise ValueError(f"n = {n} exceeds the enumeration budget {MAX_ENUM_N}")
    if n == 0:
        c = ColoredGraph(0)
        return [CanonicalColoring(0, canonical_form(c), c)]
    if not prune:
        return _enumerate_raw(n, p, q)
    if p <= 1 or q <= 1:
        return []
    level = {canonical_form(_to_coloring([0])): ([0], [0])}
    for _ in range(1, n):
        nxt = {}
        for red, blue in level.values():
            for r, b in _extend(red, blue, p, q):
                key = canonical_form(_to_coloring(r))
                if key not in nxt:
                    nxt[key] = (r, b)
        level = nxt
    return _finish(level.items(), n)


def _finish(items, n: int) -> list[CanonicalColoring]:
    out = []
    for key, (red, _) in sorted(items):
        out.append(CanonicalColoring(n, key, canonical_relabel(_to_coloring(red))))
    return out


def _enumerate_raw(n: int, p: int, q: int) -> list[CanonicalColoring]:
    if p <= 1 or q <= 1:
        return []
    pairs = [(i, j) for j in range(n) for i in range(j)]
    red = [0] * n
    blue = [0] * n
    found = {}

    def rec(k: int) -> None:
        if k == len(pairs):
            key = canonical_form(_to_coloring(red))
            if key not in found:
                found[key] = (list(red), list(blue))
            return
        i, j = pairs[k]
        for adj, lim in ((red, p), (blue, q)):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            # only cliques through the new edge can be new
            common = adj[i] & adj[j]
            ok = True
            if lim <= 2:
                ok = False
            else:
                verts = [u for u in range(n) if common >> u & 1]
                if len(verts) >= lim - 2:
                    pos = {u: x for x, u in enumerate(verts)}
                    sub = [0] * len(verts)
                    for u in verts:
                        m = adj[u] & common
                        while m:
                            low = m & -m
                            sub[pos[u]] |= 1 << pos[low.bit_length() - 1]
                            m ^= low
                    ok = _backend.find_clique(sub, lim - 2) is None
            if ok:
                rec(k + 1)
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)

    rec(0)
    return _finish(found.items(), n)


def cayley_coloring(n: int, blue_set) -> ColoredGraph:
    """K_n on Z_n: pair ij is blue iff (j - i) mod n lies in ``blue_set``, red otherwise.

    ``blue_set`` must be closed under negation mod n so the rule is symmetric.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    S = {int(d) % n for d in blue_set}
    if 0 in S:
        raise ValueError("the difference set may not contain 0")
    if any((-d) % n not in S for d in S):
        raise ValueError("the difference set must satisfy S = -S mod n")
    return ColoredGraph(n, [(i, j, BLUE if (j - i) % n in S else RED)
                            for i in range(n) for j in range(i + 1, n)])


def nice_coloring(k: int) -> ColoredGraph:
    """K_{3k-1} on Z_{3k-1}: blue iff the difference |i - j| lies in {k, ..., 2k-1}."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return cayley_coloring(3 * k - 1, range(k, 2 * k))


def gamma8_family() -> list[ColoredGraph]:
    """Gamma_8 (k = 3 nice coloring), then v0v4 recolored red, then also v1v5."""
    g8 = nice_coloring(3)
    g8p = g8.recolor(0, 4, RED)
    g8pp = g8p.recolor(1, 5, RED)
    return [g8, g8p, g8pp]
