"""Finite versions of the regularity-side steps: partition, cluster weights, symmetrization."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from . import _backend
from .genclique import search
from .model import (BLUE, HALF, ONE, RED, ZERO, ColoredGraph, EdgeColor, Graph, ModelError,
                    SimplexDistribution, WCCG, check_weight, parse_weight, weight_text)

MAX_PARTITION_N = 80
MAX_REGULAR_SIDE = 16
MAX_ISO_N = 10


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x)) if isinstance(x, float) else Fraction(x)


# ---------------------------------------------------------- two-color partition

def _max_independent(adj: list[int], verts: Sequence[int]) -> list[int]:
    """Lexicographically smallest maximum independent subset of ``verts``."""
    pos = {v: k for k, v in enumerate(verts)}
    k = len(verts)
    full = (1 << k) - 1
    comp = [0] * k
    for v in verts:
        nb = 0
        for u in verts:
            if u != v and not adj[v] >> u & 1:
                nb |= 1 << pos[u]
        comp[pos[v]] = nb & full
    return [verts[i] for i in _backend.max_clique(comp)]


@dataclass(frozen=True)
class PartitionResult:
    U1: tuple[int, ...]
    U2: tuple[int, ...]
    extractions: int
    alpha1: int
    alpha2: int


def two_color_partition(g: ColoredGraph, delta) -> PartitionResult:
    """Split V into U1, U2 with alpha of the color-k graph on U_k at most sqrt(delta) n.

    Color 1 is blue, color 2 red. While the color-1 graph on the remaining set
    has an independent set larger than sqrt(delta) n, the lexicographically
    smallest maximum one is moved to U2. Comparisons are done on squares with
    exact rationals.
    """
    n = g.n
    delta = _frac(delta)
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if n > MAX_PARTITION_N:
        raise ValueError(f"n = {n} exceeds the exact budget {MAX_PARTITION_N}")
    everything = list(range(n))
    alpha = len(_max_independent(g.underlying().adjacency(), everything))
    if alpha > delta * n:
        raise ValueError(f"precondition fails: alpha(g) = {alpha} > delta * n = {delta * n}")
    adj1 = g.adjacency(BLUE)
    adj2 = g.adjacency(RED)
    limit_sq = delta * n * n
    X = everything
    Y: list[int] = []
    steps = 0
    while True:
        S = _max_independent(adj1, X)
        if len(S) ** 2 <= limit_sq:
            break
        steps += 1
        gone = set(S)
        X = [v for v in X if v not in gone]
        Y = sorted(Y + S)
    a1 = len(_max_independent(adj1, X)) if X else 0
    a2 = len(_max_independent(adj2, Y)) if Y else 0
    if a1 ** 2 > limit_sq or a2 ** 2 > limit_sq:
        raise AssertionError("partition postcondition failed")
    return PartitionResult(tuple(X), tuple(Y), steps, a1, a2)


# ------------------------------------------------------------ regularity

def check_eps_regular(g: Graph, X: Sequence[int], Y: Sequence[int], eps) -> bool:
    """Exact epsilon-regularity of the pair (X, Y).

    Every X' of X is enumerated. For a fixed X' and size s of Y', the edge
    counts e(X', Y') range exactly between the sums of the s smallest and
    s largest degrees into X', so checking those two extremes covers every Y'.
    """
    eps = _frac(eps)
    X, Y = list(X), list(Y)
    if len(X) > MAX_REGULAR_SIDE or len(Y) > MAX_REGULAR_SIDE:
        raise ValueError(f"sides are limited to {MAX_REGULAR_SIDE} vertices")
    if not X or not Y:
        raise ValueError("X and Y must be nonempty")
    if set(X) & set(Y):
        raise ValueError("X and Y must be disjoint")
    a, b = len(X), len(Y)
    adj = g.adjacency()
    B = np.array([[1 if adj[x] >> y & 1 else 0 for y in Y] for x in X], dtype=np.int64)
    E = int(B.sum())
    D = a * b
    p, q = eps.numerator, eps.denominator
    masks = np.arange(1, 1 << a, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(a)) & 1
    sizes = bits.sum(axis=1)
    keep = sizes * q >= p * a
    bits, sizes = bits[keep], sizes[keep]
    if len(sizes) == 0:
        return True
    deg = bits @ B
    deg.sort(axis=1)
    low = np.cumsum(deg, axis=1)
    high = np.cumsum(deg[:, ::-1], axis=1)
    for s in range(1, b + 1):
        if s * q < p * b:
            continue
        area = sizes * s
        for e in (low[:, s - 1], high[:, s - 1]):
            # |e/area - E/D| <= p/q  <=>  q |e D - E area| <= p area D
            if np.any(q * np.abs(e * D - E * area) > p * area * D):
                return False
    return True


# ------------------------------------------------------------ cluster graph

@dataclass(frozen=True)
class ClusterGraph:
    """m vertices with colors and, per pair and color, a weight in {0, 1/2, 1}.

    ``w[k][i][j]`` is the weight of color ``k + 1`` (0 blue, 1 red).
    """

    m: int
    vertex_colors: tuple[EdgeColor, ...]
    w: tuple[tuple[tuple[Fraction, ...], ...], tuple[tuple[Fraction, ...], ...]]

    def __post_init__(self):
        if len(self.vertex_colors) != self.m:
            raise ModelError("vertex_colors length differs from m")
        for k in (0, 1):
            if len(self.w[k]) != self.m:
                raise ModelError("dimension mismatch")
        for i in range(self.m):
            for j in range(self.m):
                a, b = self.w[0][i][j], self.w[1][i][j]
                if i == j and (a or b):
                    raise ModelError("loops are not allowed")
                if a != self.w[0][j][i] or b != self.w[1][j][i]:
                    raise ModelError("weights must be symmetric")
                if a + b > 1:
                    raise ModelError(f"pair ({i}, {j}) has total weight {a + b} > 1")

    @classmethod
    def build(cls, m: int, vertex_colors, entries) -> "ClusterGraph":
        """``entries`` maps (i, j) to (w_blue, w_red); missing pairs are (0, 0)."""
        w = [[[ZERO] * m for _ in range(m)] for _ in range(2)]
        for (i, j), (wb, wr) in entries.items():
            for k, val in enumerate((wb, wr)):
                val = parse_weight(val) if isinstance(val, str) else check_weight(val)
                w[k][i][j] = w[k][j][i] = val
        vc = tuple(EdgeColor.parse(c) for c in vertex_colors)
        return cls(m, vc, tuple(tuple(map(tuple, w[k])) for k in (0, 1)))

    def weight(self, color: EdgeColor, i: int, j: int) -> Fraction:
        return self.w[color.index - 1][i][j]

    def mass(self) -> Fraction:
        return sum((self.w[k][i][j] for k in (0, 1) for i in range(self.m)
                    for j in range(i + 1, self.m)), ZERO)

    def degree(self, v: int) -> Fraction:
        return sum((self.w[k][v][u] for k in (0, 1) for u in range(self.m)), ZERO)

    def genclique_size(self, color) -> int:
        color = EdgeColor.parse(color)
        k = color.index - 1
        gx = [0] * self.m
        full = [0] * self.m
        for i in range(self.m):
            for j in range(self.m):
                if self.w[k][i][j] >= HALF:
                    gx[i] |= 1 << j
                if self.w[k][i][j] == ONE:
                    full[i] |= 1 << j
        marked = sum(1 << v for v in range(self.m) if self.vertex_colors[v] is color)
        X, Y = search(gx, full, marked)
        return len(X) + len(Y)

    def to_json(self) -> dict:
        pairs = []
        for i in range(self.m):
            for j in range(i + 1, self.m):
                a, b = self.w[0][i][j], self.w[1][i][j]
                if a or b:
                    pairs.append({"u": i, "v": j, "blue": weight_text(a), "red": weight_text(b)})
        return {"m": self.m, "vertex_colors": [c.value for c in self.vertex_colors],
                "pairs": pairs}

    @classmethod
    def from_json(cls, data: dict) -> "ClusterGraph":
        try:
            entries = {(int(p["u"]), int(p["v"])): (p["blue"], p["red"]) for p in data["pairs"]}
            return cls.build(int(data["m"]), data["vertex_colors"], entries)
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed cluster graph JSON: {exc}") from None


def density_band(d: Fraction, mu: Fraction) -> Fraction:
    """0 below 2mu, 1/2 on [2mu, 1/2 + 2mu), 1 from 1/2 + 2mu on."""
    if d < 2 * mu:
        return ZERO
    if d < HALF + 2 * mu:
        return HALF
    return ONE


def collapse(wb: Fraction, wr: Fraction, chi: EdgeColor) -> tuple[Fraction, Fraction]:
    """If the two colors total more than 1, lower the color ``chi`` by 1/2."""
    if wb + wr <= 1:
        return wb, wr
    if chi is BLUE:
        wb -= HALF
    else:
        wr -= HALF
    if wb + wr > 1:
        raise ModelError("both colors are full on one pair; densities exceed 1")
    return wb, wr


def cluster_weights(g: ColoredGraph, parts: Sequence[Sequence[int]], mu,
                    vertex_colors=None, eps=None) -> ClusterGraph:
    """Weight each pair of parts by the density bands of each color.

    With ``eps`` given, pairs that fail the exact regularity check get weight 0
    (sides up to 16 vertices). ``vertex_colors`` defaults to all red.
    """
    mu = _frac(mu)
    m = len(parts)
    flat = [v for p in parts for v in p]
    if len(flat) != len(set(flat)):
        raise ModelError("parts overlap")
    if sorted(flat) != list(range(g.n)):
        raise ModelError("parts must cover every vertex")
    if any(not p for p in parts):
        raise ModelError("parts must be nonempty")
    vc = [RED] * m if vertex_colors is None else [EdgeColor.parse(c) for c in vertex_colors]
    adjs = (g.adjacency(BLUE), g.adjacency(RED))
    graphs = (g.color_graph(BLUE), g.color_graph(RED)) if eps is not None else None
    entries = {}
    for i in range(m):
        for j in range(i + 1, m):
            size = len(parts[i]) * len(parts[j])
            ws = []
            for k in (0, 1):
                e = sum(bin(adjs[k][x] & sum(1 << y for y in parts[j])).count("1") for x in parts[i])
                w = density_band(Fraction(e, size), mu)
                if w and graphs is not None and not check_eps_regular(graphs[k], parts[i], parts[j], eps):
                    w = ZERO
                ws.append(w)
            chi = vc[i] if vc[i] is vc[j] else vc[min(i, j)]
            entries[(i, j)] = collapse(ws[0], ws[1], chi)
    return ClusterGraph.build(m, vc, entries)


# ----------------------------------------------------------- symmetrization

@dataclass(frozen=True)
class SymmetrizeReport:
    quotient: WCCG
    class_of: tuple[int, ...]
    class_weights: SimplexDistribution
    masses: tuple[Fraction, ...]
    steps: tuple[tuple[int, int], ...]
    final: ClusterGraph


def _twins(vc, w, i: int, j: int, m: int) -> bool:
    if vc[i] is not vc[j] or w[0][i][j] or w[1][i][j]:
        return False
    return all(w[k][i][x] == w[k][j][x] for k in (0, 1) for x in range(m) if x != i and x != j)


def symmetrize(h: ClusterGraph) -> SymmetrizeReport:
    """Merge zero pairs by copying the higher-degree endpoint, then take the quotient.

    The lexicographically first zero pair whose endpoints are not already twins
    is processed; the lower-degree endpoint and all its twins become copies of
    the other endpoint (lower index on ties). The number of twin classes drops
    by one each round. In the quotient a pair carrying 1/2 in both colors
    becomes one full edge in the color opposite to the lower-indexed class.
    """
    m = h.m
    vc = list(h.vertex_colors)
    w = [[list(r) for r in h.w[k]] for k in (0, 1)]

    def degree(v):
        return sum(w[0][v][u] + w[1][v][u] for u in range(m))

    def mass():
        return sum((w[k][i][j] for k in (0, 1) for i in range(m) for j in range(i + 1, m)), ZERO)

    masses = [mass()]
    steps = []
    while True:
        pair = next(((i, j) for i in range(m) for j in range(i + 1, m)
                     if not w[0][i][j] and not w[1][i][j] and not _twins(vc, w, i, j, m)), None)
        if pair is None:
            break
        i, j = pair
        di, dj = degree(i), degree(j)
        src, dst = (i, j) if di >= dj else (j, i)
        group = [dst] + [x for x in range(m) if x not in (src, dst) and _twins(vc, w, dst, x, m)]
        gs = set(group)
        for c in group:
            vc[c] = vc[src]
            for k in (0, 1):
                for x in range(m):
                    if x == c:
                        continue
                    val = ZERO if x in gs or x == src else w[k][src][x]
                    w[k][c][x] = w[k][x][c] = val
        steps.append((src, dst))
        masses.append(mass())
    classes: list[list[int]] = []
    class_of = [-1] * m
    for v in range(m):
        if class_of[v] >= 0:
            continue
        cls = [v] + [x for x in range(v + 1, m) if class_of[x] < 0 and _twins(vc, w, v, x, m)]
        for x in cls:
            class_of[x] = len(classes)
        classes.append(cls)
    t = len(classes)
    reps = [c[0] for c in classes]
    pairs = {}
    for a in range(t):
        for b in range(a + 1, t):
            i, j = reps[a], reps[b]
            wb, wr = w[0][i][j], w[1][i][j]
            if wb == HALF and wr == HALF:
                pairs[(a, b)] = (vc[i].other, ONE)
            elif wb and wr:
                raise ModelError("pair carries weight in both colors after collapse")
            elif wb:
                pairs[(a, b)] = (BLUE, wb)
            elif wr:
                pairs[(a, b)] = (RED, wr)
            else:
                pairs[(a, b)] = (RED, ZERO)
    quotient = WCCG.from_pairs(t, [vc[r] for r in reps], pairs)
    weights = SimplexDistribution(tuple(Fraction(len(c), m) for c in classes))
    final = ClusterGraph(m, tuple(vc), tuple(tuple(map(tuple, w[k])) for k in (0, 1)))
    return SymmetrizeReport(quotient, tuple(class_of), weights, tuple(masses), tuple(steps), final)


# ------------------------------------------------------ weighted Turan

def _pattern(parts: int):
    from .ramsey import nice_coloring

    if parts == 6:
        pent = nice_coloring(2).matrix()
        col = [[None] * 6 for _ in range(6)]
        for i in range(5):
            for j in range(5):
                col[i][j] = pent[i][j]
            col[i][5] = col[5][i] = RED
        return col, [RED] * 5 + [BLUE]
    if parts == 8:
        return nice_coloring(3).matrix(), [RED] * 8
    raise ValueError("parts must be 6 or 8")


def weighted_turan(m: int, parts: int) -> ClusterGraph:
    """F_{m,parts}: balanced classes, zero inside, full between, colored like the extremal K_parts."""
    from .constructions import balanced_parts

    col, vcols = _pattern(parts)
    blocks = balanced_parts(m, parts)
    where = {v: k for k, b in enumerate(blocks) for v in b}
    entries = {}
    for i in range(m):
        for j in range(i + 1, m):
            a, b = where[i], where[j]
            if a == b:
                continue
            entries[(i, j)] = (ONE, ZERO) if col[a][b] is BLUE else (ZERO, ONE)
    return ClusterGraph.build(m, [vcols[where[v]] for v in range(m)], entries)


# ------------------------------------------------------------ edit distance

def edit_distance(g1: Graph, g2: Graph, iso_minimize: bool = False) -> int:
    """Size of the symmetric difference, optionally minimized over relabellings of g2."""
    if g1.n != g2.n:
        raise ValueError("graphs must have the same number of vertices")
    base = len(g1.edges ^ g2.edges)
    if not iso_minimize:
        return base
    n = g1.n
    if n > MAX_ISO_N:
        raise ValueError(f"iso_minimize supports n <= {MAX_ISO_N}")
    a1, a2 = g1.adjacency(), g2.adjacency()
    best = [base]
    img = [0] * n
    used = [False] * n

    def rec(k: int, cost: int) -> None:
        if cost >= best[0]:
            return
        if k == n:
            best[0] = cost
            return
        for y in range(n):
            if used[y]:
                continue
            add = 0
            for x in range(k):
                add += (a1[k] >> x & 1) != (a2[y] >> img[x] & 1)
            used[y] = True
            img[k] = y
            rec(k + 1, cost + add)
            used[y] = False

    rec(0, 0)
    return best[0]


def edit_distance_bruteforce(g1: Graph, g2: Graph) -> int:
    """Reference minimum over all n! relabellings (small n only)."""
    n = g1.n
    e2 = [tuple(e) for e in g2.edges]
    best = None
    for perm in permutations(range(n)):
        moved = {(min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in e2}
        d = len(g1.edges ^ moved)
        best = d if best is None else min(best, d)
    return best
