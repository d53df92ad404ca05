"""Canonical labelling of small complete symbol matrices.

An instance is ``n`` vertex labels plus a symbol for every unordered pair.
The canonical string is the lexicographically smallest
``labels + upper-triangle symbols`` over the leaves of an
individualization-refinement tree. The tree is invariant under relabelling,
so every leaf string comes from a genuine relabelling and isomorphic inputs
reach the same minimum. Automorphisms found between equal leaves prune
sibling branches that lie in one orbit of the pointwise stabilizer of the
current path.
"""
from __future__ import annotations

from typing import Sequence

from .model import ColoredGraph, EdgeColor, ModelError, WCCG

_COLOR_CODE = {EdgeColor.BLUE: 1, EdgeColor.RED: 2}


def _refine(cells: list[list[int]], sym: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(sym)
    while True:
        where = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new.append(cell)
                continue
            keyed = {}
            for v in cell:
                row = sym[v]
                key = tuple(sorted((row[u], where[u]) for u in range(n) if u != v))
                keyed.setdefault(key, []).append(v)
            for key in sorted(keyed):
                new.append(keyed[key])
        if len(new) == len(cells):
            return new
        cells = new


def _leaf_string(order: list[int], labels: Sequence[int], sym: Sequence[Sequence[int]]) -> bytes:
    n = len(order)
    out = bytearray(labels[v] for v in order)
    for a in range(n):
        row = sym[order[a]]
        for b in range(a + 1, n):
            out.append(row[order[b]])
    return bytes(out)


def _orbit_of(v: int, autos: list[list[int]], n: int) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in autos:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def canonical_string(labels: Sequence[int], sym: Sequence[Sequence[int]]) -> tuple[bytes, list[int]]:
    """Canonical string and one vertex order that produces it.

    ``labels[v]`` and ``sym[u][v]`` must be small nonnegative ints (< 256);
    ``sym`` must be symmetric. The diagonal is ignored.
    """
    n = len(labels)
    if n == 0:
        return b"", []
    groups = {}
    for v in range(n):
        groups.setdefault(labels[v], []).append(v)
    start = _refine([groups[k] for k in sorted(groups)], sym)
    best: list = [None, None]
    autos: list[list[int]] = []

    def rec(cells: list[list[int]], path: list[int]) -> None:
        target = next((ci for ci, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            s = _leaf_string(order, labels, sym)
            if best[0] is None or s < best[0]:
                best[0], best[1] = s, order
            elif s == best[0]:
                g = [0] * n
                for a, b in zip(best[1], order):
                    g[a] = b
                autos.append(g)
            return
        cell = cells[target]
        done: list[int] = []
        for v in cell:
            if done:
                fixing = [g for g in autos if all(g[p] == p for p in path)]
                if any(v in _orbit_of(d, fixing, n) for d in done):
                    continue
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            rec(_refine(split, sym), path + [v])
            done.append(v)

    rec(start, [])
    return best[0], best[1]


def _coloring_symbols(c: ColoredGraph) -> tuple[list[int], list[list[int]]]:
    n = c.n
    sym = [[0] * n for _ in range(n)]
    for i, j, col in c.edges:
        sym[i][j] = sym[j][i] = _COLOR_CODE[col]
    labels = [0] * n if c.vertex_colors is None else [_COLOR_CODE[x] for x in c.vertex_colors]
    return labels, sym


def canonical_form(c: ColoredGraph) -> bytes:
    """Relabelling-invariant string; equal iff the complete colorings are isomorphic."""
    if not c.is_complete():
        raise ModelError("canonical_form needs a complete coloring")
    labels, sym = _coloring_symbols(c)
    return canonical_string(labels, sym)[0]


def canonical_relabel(c: ColoredGraph) -> ColoredGraph:
    """The representative whose natural vertex order spells the canonical string."""
    labels, sym = _coloring_symbols(c)
    _, order = canonical_string(labels, sym)
    perm = [0] * c.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return c.permuted(perm)


def wccg_canonical_form(W: WCCG) -> bytes:
    """Canonical string over vertex colors and (color, weight) pair symbols.

    A weight-0 pair gets one symbol regardless of its color.
    """
    t = W.t
    sym = [[0] * t for _ in range(t)]
    for i, j, col, w in W.pairs():
        s = 0 if w == 0 else _COLOR_CODE[col] * 3 + int(2 * w)
        sym[i][j] = sym[j][i] = s
    labels = [_COLOR_CODE[x] for x in W.vertex_colors]
    return canonical_string(labels, sym)[0]
