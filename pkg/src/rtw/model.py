"""Domain types shared by every module, plus JSON (de)serialization.

Weights are exact :class:`fractions.Fraction` values restricted to
``{0, 1/2, 1}``. All objects are immutable after construction.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)
WEIGHTS = (ZERO, HALF, ONE)
_WEIGHT_TEXT = {"0": ZERO, "1/2": HALF, "1": ONE}


class ModelError(ValueError):
    """Raised for malformed or inconsistent input objects."""


class EdgeColor(enum.Enum):
    """Two colors; ``blue`` is color 1 and ``red`` is color 2."""

    BLUE = "blue"
    RED = "red"

    @property
    def index(self) -> int:
        return 1 if self is EdgeColor.BLUE else 2

    @property
    def other(self) -> "EdgeColor":
        return EdgeColor.RED if self is EdgeColor.BLUE else EdgeColor.BLUE

    @classmethod
    def parse(cls, value) -> "EdgeColor":
        if isinstance(value, EdgeColor):
            return value
        if value in (1, "1"):
            return cls.BLUE
        if value in (2, "2"):
            return cls.RED
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ModelError(f"unknown color {value!r}") from None

    def __str__(self) -> str:
        return self.value


BLUE = EdgeColor.BLUE
RED = EdgeColor.RED


def parse_weight(value) -> Fraction:
    """Parse ``"0"``, ``"1/2"`` or ``"1"``; decimals such as ``"0.5"`` are rejected."""
    if isinstance(value, Fraction):
        if value in WEIGHTS:
            return value
        raise ModelError(f"weight {value} not in {{0, 1/2, 1}}")
    if isinstance(value, int) and not isinstance(value, bool) and value in (0, 1):
        return Fraction(value)
    if isinstance(value, str) and value.strip() in _WEIGHT_TEXT:
        return _WEIGHT_TEXT[value.strip()]
    raise ModelError(f"weight {value!r} must be one of \"0\", \"1/2\", \"1\"")


def weight_text(w: Fraction) -> str:
    return "1/2" if w == HALF else str(w.numerator)


def check_weight(w) -> Fraction:
    w = Fraction(w)
    if w not in WEIGHTS:
        raise ModelError(f"weight {w} not in {{0, 1/2, 1}}")
    return w


@dataclass(frozen=True)
class WCCG:
    """Weighted colored complete graph K_t(w).

    ``colors[i][j]`` and ``weights[i][j]`` describe the pair ``{i, j}``; the
    diagonal holds ``None`` and ``0``. The color of a weight-0 pair is carried
    but ignored by every consumer.
    """

    t: int
    vertex_colors: tuple[EdgeColor, ...]
    colors: tuple[tuple[EdgeColor | None, ...], ...]
    weights: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        t = self.t
        if t < 1:
            raise ModelError("t must be >= 1")
        if len(self.vertex_colors) != t or len(self.colors) != t or len(self.weights) != t:
            raise ModelError("dimension mismatch")
        for i in range(t):
            if len(self.colors[i]) != t or len(self.weights[i]) != t:
                raise ModelError("dimension mismatch")
            if self.weights[i][i] != 0:
                raise ModelError("loops are not allowed")
            for j in range(i + 1, t):
                if self.weights[i][j] != self.weights[j][i] or self.colors[i][j] != self.colors[j][i]:
                    raise ModelError(f"pair ({i}, {j}) is not symmetric")
                if self.weights[i][j] not in WEIGHTS:
                    raise ModelError(f"pair ({i}, {j}) has weight {self.weights[i][j]}")
                if not isinstance(self.colors[i][j], EdgeColor):
                    raise ModelError(f"pair ({i}, {j}) has no color")

    @classmethod
    def from_pairs(cls, t: int, vertex_colors: Sequence, pairs) -> "WCCG":
        """Build from ``{(i, j): (color, weight)}`` covering all C(t, 2) pairs."""
        colors = [[None] * t for _ in range(t)]
        weights = [[ZERO] * t for _ in range(t)]
        seen = set()
        items = pairs.items() if isinstance(pairs, dict) else pairs
        for key, val in items:
            i, j = key
            if not (0 <= i < t and 0 <= j < t) or i == j:
                raise ModelError(f"bad pair ({i}, {j})")
            a, b = min(i, j), max(i, j)
            if (a, b) in seen:
                raise ModelError(f"duplicate pair ({a}, {b})")
            seen.add((a, b))
            c, w = val
            c = EdgeColor.parse(c)
            w = parse_weight(w) if isinstance(w, str) else check_weight(w)
            colors[a][b] = colors[b][a] = c
            weights[a][b] = weights[b][a] = w
        if len(seen) != t * (t - 1) // 2:
            missing = [(i, j) for i in range(t) for j in range(i + 1, t) if (i, j) not in seen]
            raise ModelError(f"incomplete pair data: missing {missing[:5]}")
        vc = tuple(EdgeColor.parse(c) for c in vertex_colors)
        return cls(t, vc, tuple(map(tuple, colors)), tuple(map(tuple, weights)))

    @classmethod
    def uniform(cls, t: int, color=RED, weight=ONE, vertex_color=RED) -> "WCCG":
        pairs = {(i, j): (color, weight) for i in range(t) for j in range(i + 1, t)}
        return cls.from_pairs(t, [vertex_color] * t, pairs)

    @classmethod
    def from_coloring(cls, coloring: "ColoredGraph", weight=ONE, vertex_colors=None) -> "WCCG":
        """Lift a complete 2-coloring to a WCCG with a constant weight."""
        if not coloring.is_complete():
            raise ModelError("coloring must be complete")
        t = coloring.n
        vc = vertex_colors if vertex_colors is not None else (coloring.vertex_colors or [RED] * t)
        pairs = {(i, j): (c, weight) for i, j, c in coloring.edges}
        return cls.from_pairs(t, vc, pairs)

    def pairs(self) -> Iterable[tuple[int, int, EdgeColor, Fraction]]:
        for i in range(self.t):
            for j in range(i + 1, self.t):
                yield i, j, self.colors[i][j], self.weights[i][j]

    def weight_matrix(self) -> list[list[Fraction]]:
        return [list(row) for row in self.weights]

    def doubled_weights(self) -> list[int]:
        """Row-major integer matrix ``2 * w`` (entries 0, 1, 2)."""
        return [int(2 * w) for row in self.weights for w in row]

    def with_pair(self, i: int, j: int, color=None, weight=None) -> "WCCG":
        colors = [list(r) for r in self.colors]
        weights = [list(r) for r in self.weights]
        if color is not None:
            colors[i][j] = colors[j][i] = EdgeColor.parse(color)
        if weight is not None:
            weights[i][j] = weights[j][i] = check_weight(weight)
        return WCCG(self.t, self.vertex_colors, tuple(map(tuple, colors)), tuple(map(tuple, weights)))

    def with_vertex_color(self, v: int, color) -> "WCCG":
        vc = list(self.vertex_colors)
        vc[v] = EdgeColor.parse(color)
        return WCCG(self.t, tuple(vc), self.colors, self.weights)

    def delete_vertex(self, x: int) -> "WCCG":
        keep = [v for v in range(self.t) if v != x]
        return self.induced(keep)

    def induced(self, verts: Sequence[int]) -> "WCCG":
        verts = list(verts)
        return WCCG(
            len(verts),
            tuple(self.vertex_colors[v] for v in verts),
            tuple(tuple(self.colors[a][b] for b in verts) for a in verts),
            tuple(tuple(self.weights[a][b] for b in verts) for a in verts),
        )

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "vertex_colors": [c.value for c in self.vertex_colors],
            "edges": [
                {"u": i, "v": j, "color": c.value, "weight": weight_text(w)}
                for i, j, c, w in self.pairs()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WCCG":
        try:
            t = int(data["t"])
            vc = data["vertex_colors"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed WCCG JSON: {exc}") from None
        if len(vc) != t:
            raise ModelError("vertex_colors length differs from t")
        pairs = []
        for e in edges:
            try:
                w = e["weight"]
                if not isinstance(w, str):
                    raise ModelError(f"weight {w!r} must be a string")
                pairs.append(((int(e["u"]), int(e["v"])), (e["color"], w)))
            except (KeyError, TypeError) as exc:
                raise ModelError(f"malformed edge {e!r}") from exc
        return cls.from_pairs(t, vc, pairs)


@dataclass(frozen=True)
class SimplexDistribution:
    """Nonnegative exact rationals summing to exactly 1."""

    u: tuple[Fraction, ...]

    def __post_init__(self):
        u = tuple(Fraction(x) for x in self.u)
        object.__setattr__(self, "u", u)
        if not u:
            raise ModelError("empty distribution")
        if any(x < 0 for x in u):
            raise ModelError("negative entry in distribution")
        if sum(u) != 1:
            raise ModelError(f"distribution sums to {sum(u)}, not 1")

    @classmethod
    def uniform(cls, t: int) -> "SimplexDistribution":
        return cls(tuple(Fraction(1, t) for _ in range(t)))

    @classmethod
    def point(cls, t: int, v: int) -> "SimplexDistribution":
        return cls(tuple(ONE if i == v else ZERO for i in range(t)))

    def __len__(self) -> int:
        return len(self.u)

    def __getitem__(self, i: int) -> Fraction:
        return self.u[i]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.u) if x > 0)

    def to_json(self) -> list[str]:
        return [str(x) for x in self.u]


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Plain simple graph on ``range(n)``."""

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable = ()):
        norm = set()
        for e in edges:
            i, j = int(e[0]), int(e[1])
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ModelError(f"bad edge ({i}, {j})")
            key = _norm_edge(i, j)
            if key in norm:
                raise ModelError(f"duplicate edge {key}")
            norm.add(key)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def complement(self) -> "Graph":
        return Graph(self.n, [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                              if (i, j) not in self.edges])

    def induced(self, verts: Sequence[int]) -> "Graph":
        pos = {v: k for k, v in enumerate(verts)}
        return Graph(len(pos), [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["n"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed graph JSON: {exc}") from None


@dataclass(frozen=True)
class ColoredGraph:
    """n-vertex graph whose edges are red or blue; absent pairs are non-edges."""

    n: int
    edges: frozenset
    vertex_colors: tuple[EdgeColor, ...] | None = None

    def __init__(self, n: int, edges: Iterable = (), vertex_colors=None):
        norm = {}
        for i, j, c in edges:
            i, j = int(i), int(j)
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ModelError(f"bad edge ({i}, {j})")
            key = _norm_edge(i, j)
            if key in norm:
                raise ModelError(f"duplicate edge {key}")
            norm[key] = EdgeColor.parse(c)
        if vertex_colors is not None:
            vertex_colors = tuple(EdgeColor.parse(c) for c in vertex_colors)
            if len(vertex_colors) != n:
                raise ModelError("vertex_colors length differs from n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset((i, j, c) for (i, j), c in norm.items()))
        object.__setattr__(self, "vertex_colors", vertex_colors)

    @classmethod
    def from_matrix(cls, colors: Sequence[Sequence], vertex_colors=None) -> "ColoredGraph":
        n = len(colors)
        return cls(n, [(i, j, colors[i][j]) for i in range(n) for j in range(i + 1, n)
                       if colors[i][j] is not None], vertex_colors)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def color_of(self) -> dict:
        return {(i, j): c for i, j, c in self.edges}

    def matrix(self) -> list[list[EdgeColor | None]]:
        m = [[None] * self.n for _ in range(self.n)]
        for i, j, c in self.edges:
            m[i][j] = m[j][i] = c
        return m

    def adjacency(self, color: EdgeColor | None = None) -> list[int]:
        adj = [0] * self.n
        for i, j, c in self.edges:
            if color is None or c is color:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        return adj

    def color_graph(self, color: EdgeColor) -> Graph:
        return Graph(self.n, [(i, j) for i, j, c in self.edges if c is color])

    def underlying(self) -> Graph:
        return Graph(self.n, [(i, j) for i, j, _ in self.edges])

    def permuted(self, perm: Sequence[int]) -> "ColoredGraph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        vc = None
        if self.vertex_colors is not None:
            vc = [None] * self.n
            for v, c in enumerate(self.vertex_colors):
                vc[perm[v]] = c
        return ColoredGraph(self.n, [(perm[i], perm[j], c) for i, j, c in self.edges], vc)

    def swap_colors(self) -> "ColoredGraph":
        vc = None if self.vertex_colors is None else [c.other for c in self.vertex_colors]
        return ColoredGraph(self.n, [(i, j, c.other) for i, j, c in self.edges], vc)

    def recolor(self, i: int, j: int, color) -> "ColoredGraph":
        key = _norm_edge(i, j)
        edges = [(a, b, c) for a, b, c in self.edges if (a, b) != key]
        edges.append((key[0], key[1], EdgeColor.parse(color)))
        return ColoredGraph(self.n, edges, self.vertex_colors)

    def to_json(self) -> dict:
        out = {"n": self.n}
        if self.vertex_colors is not None:
            out["vertex_colors"] = [c.value for c in self.vertex_colors]
        out["complete"] = self.is_complete()
        out["edges"] = [{"u": i, "v": j, "color": c.value} for i, j, c in sorted(self.edges, key=lambda e: (e[0], e[1]))]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ColoredGraph":
        try:
            n = int(data["n"])
            edges = [(int(e["u"]), int(e["v"]), e["color"]) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed ColoredGraph JSON: {exc}") from None
        g = cls(n, edges, data.get("vertex_colors"))
        if data.get("complete") and not g.is_complete():
            raise ModelError("graph flagged complete but pairs are missing")
        return g


@dataclass(frozen=True)
class GeneralizedCliqueWitness:
    """A pair ``(X, Y)`` with ``Y`` a subset of ``X``; its size is ``|X| + |Y|``."""

    color: EdgeColor
    X: tuple[int, ...]
    Y: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(sorted(self.X)))
        object.__setattr__(self, "Y", tuple(sorted(self.Y)))
        object.__setattr__(self, "color", EdgeColor.parse(self.color))

    @property
    def size(self) -> int:
        return len(self.X) + len(self.Y)

    def to_json(self) -> dict:
        return {"color": self.color.value, "X": list(self.X), "Y": list(self.Y), "size": self.size}


def validate_witness(W: WCCG, wit: GeneralizedCliqueWitness) -> bool:
    """Check the three generalized-clique conditions for ``wit`` in ``W``.

    Every pair inside ``X`` must carry the witness color with weight at least
    1/2, every pair inside ``Y`` must have weight 1, and every vertex of ``Y``
    must have the witness color.
    """
    verts = set(wit.X) | set(wit.Y)
    if any(not (0 <= v < W.t) for v in verts):
        raise ModelError("bad witness: vertex index out of range")
    if len(set(wit.X)) != len(wit.X) or len(set(wit.Y)) != len(wit.Y):
        raise ModelError("bad witness: repeated vertex")
    if not set(wit.Y) <= set(wit.X):
        return False
    c = wit.color
    if any(W.vertex_colors[v] is not c for v in wit.Y):
        return False
    X = wit.X
    for a in range(len(X)):
        for b in range(a + 1, len(X)):
            i, j = X[a], X[b]
            if W.weights[i][j] < HALF or W.colors[i][j] is not c:
                return False
    Y = wit.Y
    for a in range(len(Y)):
        for b in range(a + 1, len(Y)):
            if W.weights[Y[a]][Y[b]] != ONE:
                return False
    return True


# ------------------------------------------------------------------ file I/O

def dumps(obj) -> str:
    return json.dumps(obj.to_json(), indent=2) + "\n"


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def parse_object(data: dict):
    """Dispatch on the JSON shape: WCCG has ``t``; colored graphs have dict edges."""
    if not isinstance(data, dict):
        raise ModelError("top-level JSON value must be an object")
    if "t" in data:
        return WCCG.from_json(data)
    if "n" in data and "edges" in data:
        edges = data["edges"]
        if edges and isinstance(edges[0], dict):
            return ColoredGraph.from_json(data)
        if not edges and ("complete" in data or "vertex_colors" in data):
            return ColoredGraph.from_json(data)
        return Graph.from_json(data)
    raise ModelError("unrecognised JSON object")


def load(path, kind=None):
    """Load a WCCG, ColoredGraph or Graph from ``path``.

    ``kind`` optionally forces the expected type.
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelError(f"malformed JSON in {path}: {exc}") from None
    if kind is None:
        return parse_object(data)
    return kind.from_json(data)
