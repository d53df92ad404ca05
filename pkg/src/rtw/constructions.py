"""Graph constructions: Turan, canonical blow-ups, U/H graphs, sphere graphs.

Randomness comes only from ``numpy.random.Generator(numpy.random.PCG64(seed))``
so an instance is fixed by its parameters and a 64-bit seed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import _backend
from .model import BLUE, RED, ColoredGraph, EdgeColor, Graph, ModelError, WCCG
from .ramsey import enumerate_ramsey, find_mono_clique, nice_coloring

MAX_ALPHA_N = 80
DEFAULT_DIM = 20


class ConstructionError(RuntimeError):
    """A generated instance failed one of its own defining checks."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def rng_for(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2 ** 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.PCG64(seed))


def balanced_parts(n: int, p: int) -> list[list[int]]:
    """``p`` consecutive blocks of ``range(n)``; larger blocks come first."""
    if p < 1:
        raise ValueError("p must be >= 1")
    base, extra = divmod(n, p)
    parts, start = [], 0
    for i in range(p):
        size = base + (1 if i < extra else 0)
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def turan_graph(n: int, p: int) -> Graph:
    """Complete balanced p-partite graph T_{n,p}."""
    parts = balanced_parts(n, p)
    where = {v: k for k, part in enumerate(parts) for v in part}
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if where[i] != where[j]])


def canonical_coloring(parts: Sequence[Sequence[int]], part_colors: Sequence,
                       cross_colors, internal_graphs: Sequence[Graph | None]) -> ColoredGraph:
    """Blow-up with one color per class interior and one per pair of classes.

    ``cross_colors[i][j]`` is the color of every edge between parts i and j,
    or None for no edges. ``internal_graphs[i]`` lives on ``range(len(parts[i]))``
    and is placed on part i with color ``part_colors[i]``.
    """
    k = len(parts)
    if len(part_colors) != k or len(internal_graphs) != k or len(cross_colors) != k:
        raise ModelError("dimension mismatch")
    n = sum(len(p) for p in parts)
    seen = sorted(v for p in parts for v in p)
    if seen != list(range(n)):
        raise ModelError("parts must partition range(n)")
    edges = []
    for i, part in enumerate(parts):
        g = internal_graphs[i]
        if g is None:
            continue
        if g.n != len(part):
            raise ModelError(f"internal graph {i} has {g.n} vertices, part has {len(part)}")
        col = EdgeColor.parse(part_colors[i])
        edges.extend((part[a], part[b], col) for a, b in g.edges)
    for i in range(k):
        for j in range(i + 1, k):
            c = cross_colors[i][j]
            if c is None:
                continue
            c = EdgeColor.parse(c)
            edges.extend((a, b, c) for a in parts[i] for b in parts[j])
    return ColoredGraph(n, edges)


# --------------------------------------------------- triangle-free graphs

def triangle_free_process(n: int, seed: int) -> Graph:
    """Scan all pairs in a seeded random order; keep a pair unless it closes a triangle."""
    rng = rng_for(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    adj = [0] * n
    edges = []
    for k in rng.permutation(len(pairs)):
        i, j = pairs[k]
        if adj[i] & adj[j]:
            continue
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        edges.append((i, j))
    return Graph(n, edges)


TRIANGLE_FREE_GENERATORS: dict[str, Callable[[int, int], Graph]] = {
    "process": triangle_free_process,
}


def is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency()
    return all(not (adj[i] & adj[j]) for i, j in g.edges)


def pseudo_erdos_graph(n: int, seed: int, generator: str | Callable = "process") -> Graph:
    """Triangle-free stand-in for an Erdos graph with small independence number."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gen = TRIANGLE_FREE_GENERATORS[generator] if isinstance(generator, str) else generator
    g = gen(n, seed)
    if not is_triangle_free(g):
        raise ConstructionError("generator returned a graph with a triangle")
    return g


def independence_number(g: Graph, max_n: int = MAX_ALPHA_N) -> tuple[int, list[int]]:
    """Exact alpha and the lexicographically smallest maximum independent set."""
    if g.n > max_n:
        raise ValueError(f"n = {g.n} exceeds the exact independence budget {max_n}")
    full = (1 << g.n) - 1
    comp = [full & ~a & ~(1 << v) for v, a in enumerate(g.adjacency())]
    witness = _backend.max_clique(comp)
    return len(witness), witness


# ----------------------------------------------------- U and H constructions

def _ramsey_pattern(p: int, q: int) -> ColoredGraph:
    """A largest coloring with no red K_q and no blue K_p (first in canonical order)."""
    if (p, q) == (3, 3):
        return nice_coloring(2)
    last = None
    for m in range(1, 10):
        found = enumerate_ramsey(m, q, p)
        if not found:
            break
        last = found[0].graph
    else:
        raise ValueError(f"r({p}, {q}) is beyond the enumeration budget")
    if last is None:
        raise ValueError("no admissible pattern")
    return last


def u_graph(n: int, p: int = 3, q: int = 3, seed: int = 0, generator="process") -> ColoredGraph:
    """U(n, p, q): T_{n, r(p,q)-1} colored by a Ramsey pattern, red triangle-free interiors.

    Contains no red K_{2q-1} and no blue K_p.
    """
    pat = _ramsey_pattern(p, q)
    t = pat.n
    parts = balanced_parts(n, t)
    cm = pat.matrix()
    interiors = [pseudo_erdos_graph(len(part), seed + k, generator) if part else Graph(0)
                 for k, part in enumerate(parts)]
    return canonical_coloring(parts, [RED] * t, cm, interiors)


def h_graph(n: int, p: int = 3, q: int = 3, seed: int = 0, generator="process") -> ColoredGraph:
    """H(n, p, q): r(p,q) classes; the first r-1 as in U, the last blue triangle-free.

    Every edge to the last class is red; class sizes are balanced, so the last
    class has ``n // r(p, q)`` vertices. Contains no red K_{2q} and no blue K_p
    for p >= 3.
    """
    pat = _ramsey_pattern(p, q)
    t = pat.n + 1
    parts = balanced_parts(n, t)
    cm = [row + [RED] for row in pat.matrix()] + [[RED] * pat.n + [None]]
    colors = [RED] * (t - 1) + [BLUE]
    interiors = [pseudo_erdos_graph(len(part), seed + k, generator) if part else Graph(0)
                 for k, part in enumerate(parts)]
    return canonical_coloring(parts, colors, cm, interiors)


# ------------------------------------------------------------ sphere graphs

@dataclass(frozen=True)
class SphereGraph:
    points: np.ndarray
    classes: tuple[tuple[int, ...], ...]
    graph: Graph
    mu: float


@dataclass(frozen=True)
class GBESpec:
    base: WCCG
    class_sizes: tuple[int, ...]
    dim: int = DEFAULT_DIM
    mu: float = 0.3
    seed: int = 0

    def __post_init__(self):
        if len(self.class_sizes) != self.base.t:
            raise ModelError("class_sizes must have one entry per base vertex")
        if any(s < 1 for s in self.class_sizes):
            raise ModelError("class sizes must be >= 1")
        if not 0 < self.mu < 2 ** 0.5:
            raise ModelError("mu must lie in (0, sqrt 2)")
        if self.dim < 1:
            raise ModelError("dim must be >= 1")


def sphere_points(rng: np.random.Generator, count: int, h: int) -> np.ndarray:
    """``count`` uniform points on the unit sphere in R^{h+1}."""
    x = rng.standard_normal((count, h + 1))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a[:, None, :] - b[None, :, :]
    return np.einsum("ijk,ijk->ij", diff, diff)


def sphere_edges(points: np.ndarray, classes, mu: float, within_strict: bool,
                 cross_rule) -> list[tuple[int, int]]:
    """Edges from the distance rules.

    Within a class: ``d >= 2 - mu`` (or ``>`` if ``within_strict``). Between
    classes i < j, ``cross_rule(i, j)`` returns "full", "near" (``d < sqrt2 - mu``)
    or None.
    """
    within_sq = (2.0 - mu) ** 2
    cross_sq = (2.0 ** 0.5 - mu) ** 2
    edges = []
    for ci, cls in enumerate(classes):
        idx = np.array(cls, dtype=int)
        if len(idx) > 1:
            d = _sq_dists(points[idx], points[idx])
            hit = d > within_sq if within_strict else d >= within_sq
            a, b = np.nonzero(np.triu(hit, 1))
            edges.extend((int(idx[x]), int(idx[y])) for x, y in zip(a, b))
        for cj in range(ci + 1, len(classes)):
            rule = cross_rule(ci, cj)
            if rule is None:
                continue
            jdx = np.array(classes[cj], dtype=int)
            if rule == "full":
                edges.extend((int(x), int(y)) for x in idx for y in jdx)
                continue
            d = _sq_dists(points[idx], points[jdx])
            a, b = np.nonzero(d < cross_sq)
            edges.extend((int(idx[x]), int(jdx[y])) for x, y in zip(a, b))
    return [(min(e), max(e)) for e in edges]


def be_graph(n: int, h: int, eps: float, seed: int) -> SphereGraph:
    """Two classes of n/2 random sphere points with mu = eps / sqrt(h)."""
    if n % 2 or n < 2:
        raise ValueError("n must be even and positive")
    if h < 2:
        raise ValueError("h must be >= 2")
    mu = eps / h ** 0.5
    pts = sphere_points(rng_for(seed), n, h)
    classes = (tuple(range(n // 2)), tuple(range(n // 2, n)))
    edges = sphere_edges(pts, classes, mu, False, lambda i, j: "near")
    return SphereGraph(pts, classes, Graph(n, edges), mu)


def check_be_graph(sg: SphereGraph) -> None:
    """Raise ConstructionError with a witness if a K4 or an in-class triangle exists."""
    adj = sg.graph.adjacency()
    k4 = _backend.find_clique(adj, 4)
    if k4 is not None:
        raise ConstructionError("BE instance contains a K4", k4)
    for cls in sg.classes:
        sub = sg.graph.induced(cls)
        if not is_triangle_free(sub):
            tri = _backend.find_clique(sub.adjacency(), 3)
            raise ConstructionError("BE class contains a triangle", [cls[v] for v in tri])


def gbe_classes(spec: GBESpec) -> tuple[tuple[int, ...], ...]:
    out, start = [], 0
    for s in spec.class_sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return tuple(out)


def gbe_graph(spec: GBESpec) -> ColoredGraph:
    """Weighted t-partite sphere graph colored canonically by the base.

    Full base pairs join classes completely, half pairs by the near-orthogonal
    rule, weight-0 pairs not at all. Interiors follow the strict near-antipodal
    rule and take the class vertex's color.
    """
    base = spec.base
    n = sum(spec.class_sizes)
    classes = gbe_classes(spec)
    pts = sphere_points(rng_for(spec.seed), n, spec.dim)

    def rule(i, j):
        w = base.weights[i][j]
        if w == 0:
            return None
        return "full" if w == 1 else "near"

    where = [0] * n
    for ci, cls in enumerate(classes):
        for v in cls:
            where[v] = ci
    colored = []
    for a, b in sphere_edges(pts, classes, spec.mu, True, rule):
        i, j = where[a], where[b]
        colored.append((a, b, base.vertex_colors[i] if i == j else base.colors[i][j]))
    return ColoredGraph(n, colored)


def edge_count_check(g: ColoredGraph, spec: GBESpec) -> float:
    """``|e(g) - u A u^T n^2 / 2| / n^2`` with ``u`` the class proportions."""
    n = sum(spec.class_sizes)
    u = [Fraction(s, n) for s in spec.class_sizes]
    quad = sum(2 * w * u[i] * u[j] for i, j, _, w in spec.base.pairs())
    expected = quad * n * n / 2
    return float(abs(len(g.edges) - expected) / (n * n))


__all__ = [
    "ConstructionError", "GBESpec", "SphereGraph", "balanced_parts", "be_graph",
    "canonical_coloring", "check_be_graph", "edge_count_check", "find_mono_clique",
    "gbe_graph", "h_graph", "independence_number", "is_triangle_free", "pseudo_erdos_graph",
    "rng_for", "turan_graph", "u_graph",
]
