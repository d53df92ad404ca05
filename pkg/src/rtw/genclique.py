"""Maximum generalized complete subgraphs of one color in a WCCG.

For a color ``c`` a generalized clique is a pair ``(X, Y)`` with ``Y`` inside
``X``: every pair of ``X`` has color ``c`` and weight at least 1/2, and ``Y``
is a set of ``c``-colored vertices pairwise joined by full ``c`` edges. Its
size is ``|X| + |Y|``.
"""
from __future__ import annotations

from fractions import Fraction

from . import _backend
from .model import HALF, ONE, EdgeColor, GeneralizedCliqueWitness, WCCG


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _greedy_colors(cand: int, adj: list[int]) -> int:
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~adj[v]
    return colors


def _y_of(xmask: int, full: list[int], marked: int) -> list[int]:
    m = xmask & marked
    verts = _bits(m)
    if len(verts) <= 1:
        return verts
    pos = {v: k for k, v in enumerate(verts)}
    sub = [0] * len(verts)
    for v in verts:
        for w in _bits(full[v] & m):
            sub[pos[v]] |= 1 << pos[w]
    return [verts[k] for k in _backend.max_clique(sub)]


def search(gx: list[int], full: list[int], marked: int, target: int = 0):
    """Best ``(X, Y)`` as sorted lists.

    ``gx`` is adjacency of pairs usable inside X, ``full`` of pairs usable
    inside Y (a subgraph of ``gx``), ``marked`` the bitset of vertices allowed
    in Y. X is explored in lexicographic order and replaced only on strict
    improvement, so the first X of maximum size wins; Y is the
    lexicographically smallest maximum clique inside it. With ``target > 0``
    the search stops at the first pair reaching that size.
    """
    n = len(gx)
    best = [-1, [], []]

    def rec(chosen: list[int], xmask: int, cand: int) -> bool:
        y = _y_of(xmask, full, marked)
        val = len(chosen) + len(y)
        if val > best[0]:
            best[0], best[1], best[2] = val, list(chosen), y
            if target and val >= target:
                return True
        while cand:
            need = target if target else best[0] + 1
            # |X| can grow by at most the colour bound; each marked vertex adds one more
            grow = _greedy_colors(cand, gx)
            ymax = min(bin(xmask & marked).count("1") + bin(cand & marked).count("1"),
                       len(chosen) + grow)
            if len(chosen) + grow + ymax < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if rec(chosen, xmask | low, cand & gx[v]):
                return True
            chosen.pop()
        return False

    rec([], 0, (1 << n) - 1)
    return best[1], best[2]


def _graphs(W: WCCG, color: EdgeColor):
    t = W.t
    gx = [0] * t
    full = [0] * t
    for i, j, c, w in W.pairs():
        if c is color and w >= HALF:
            gx[i] |= 1 << j
            gx[j] |= 1 << i
            if w == ONE:
                full[i] |= 1 << j
                full[j] |= 1 << i
    marked = sum(1 << v for v in range(t) if W.vertex_colors[v] is color)
    return gx, full, marked


def max_generalized_clique(W: WCCG, color) -> GeneralizedCliqueWitness:
    color = EdgeColor.parse(color)
    X, Y = search(*_graphs(W, color))
    return GeneralizedCliqueWitness(color, tuple(X), tuple(Y))


def find_generalized_K(W: WCCG, color, ell: int) -> GeneralizedCliqueWitness | None:
    """First witness of size at least ``ell`` in search order, or None."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    color = EdgeColor.parse(color)
    X, Y = search(*_graphs(W, color), target=ell)
    if len(X) + len(Y) < ell:
        return None
    return GeneralizedCliqueWitness(color, tuple(X), tuple(Y))


def has_generalized_K(W: WCCG, color, ell: int) -> bool:
    return find_generalized_K(W, color, ell) is not None


def brute_force_max(W: WCCG, color) -> int:
    """Size of the largest generalized clique by checking every (X, Y); t <= 10."""
    from itertools import combinations

    from .model import validate_witness

    color = EdgeColor.parse(color)
    best = 0
    for xm in range(1 << W.t):
        X = _bits(xm)
        if not validate_witness(W, GeneralizedCliqueWitness(color, tuple(X), ())):
            continue
        for r in range(len(X), -1, -1):
            if len(X) + r <= best:
                break
            if any(validate_witness(W, GeneralizedCliqueWitness(color, tuple(X), Y))
                   for Y in combinations(X, r)):
                best = len(X) + r
                break
    return best


class PartialGen:
    """Generalized-clique tests on a partially assigned K_t(w).

    Unassigned pairs are unusable in both colors.
    """

    def __init__(self, t: int, vertex_colors):
        self.t = t
        self.vertex_colors = [EdgeColor.parse(c) for c in vertex_colors]
        self._g = {c: ([0] * t, [0] * t) for c in EdgeColor}
        self._marked = {c: sum(1 << v for v in range(t) if self.vertex_colors[v] is c)
                        for c in EdgeColor}

    def set_pair(self, i: int, j: int, color: EdgeColor, w: Fraction) -> None:
        gx, full = self._g[color]
        if w >= HALF:
            gx[i] |= 1 << j
            gx[j] |= 1 << i
        if w == ONE:
            full[i] |= 1 << j
            full[j] |= 1 << i

    def clear_pair(self, i: int, j: int) -> None:
        for gx, full in self._g.values():
            for adj in (gx, full):
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    def has(self, color: EdgeColor, ell: int) -> bool:
        gx, full = self._g[color]
        X, Y = search(gx, full, self._marked[color], target=ell)
        return len(X) + len(Y) >= ell
