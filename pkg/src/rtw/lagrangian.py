"""Weighted edge density of a WCCG over the probability simplex.

``g(W, u) = sum_{i<j} w(i, j) u_i u_j``; every value called ``2g`` below is the
quadratic form ``u A u^T`` with ``A`` the symmetric weight matrix.

Exact maximization enumerates supports. On a support ``S`` every maximizer
satisfies ``A_SS u = lam * 1`` and ``sum(u) = 1``, and then ``u A u^T = lam``.
The compiled or pure kernel (:mod:`rtw._backend`) solves those systems with
fraction-free elimination on doubled integer weights; this module turns the
winning supports into exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import _backend
from .model import HALF, ONE, RED, ZERO, EdgeColor, ModelError, SimplexDistribution, WCCG

EXACT_MAX_T = 16


class BudgetError(RuntimeError):
    """The instance is larger than the exhaustive method supports."""


@dataclass(frozen=True)
class LagrangianResult:
    g_max: Fraction
    witness: SimplexDistribution
    interior: bool
    kkt_supports: tuple[tuple[int, ...], ...]

    @property
    def two_g(self) -> Fraction:
        return 2 * self.g_max

    @property
    def dense(self) -> bool:
        t = len(self.witness)
        return self.kkt_supports == (tuple(range(t)),)


@dataclass(frozen=True)
class ApproxLagrangianResult:
    g_max: float
    witness: tuple[float, ...]
    interior: bool
    converged: bool
    iterations: int

    @property
    def two_g(self) -> float:
        return 2.0 * self.g_max


def _check_u(W: WCCG, u) -> SimplexDistribution:
    if not isinstance(u, SimplexDistribution):
        u = SimplexDistribution(tuple(u))
    if len(u) != W.t:
        raise ModelError(f"dimension mismatch: |u| = {len(u)}, t = {W.t}")
    return u


def evaluate_g(W: WCCG, u) -> Fraction:
    u = _check_u(W, u)
    total = ZERO
    for i, j, _, w in W.pairs():
        if w:
            total += w * u[i] * u[j]
    return total


def weighted_degree(W: WCCG, u, x: int) -> Fraction:
    """``t * sum_y w(x, y) u_y``."""
    u = _check_u(W, u)
    if not 0 <= x < W.t:
        raise ModelError(f"vertex {x} out of range")
    row = W.weights[x]
    return W.t * sum((row[y] * u[y] for y in range(W.t) if row[y]), ZERO)


# ------------------------------------------------------------ exact solver

def _mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[int], bool]:
    """Reduced row echelon form in place; returns (pivot columns, consistent)."""
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    consistent = all(rows[i][ncols] == 0 for i in range(r, len(rows)))
    return pivots, consistent


def _face_system(W: WCCG, verts: Sequence[int]) -> list[list[Fraction]]:
    k = len(verts)
    rows = [[W.weights[i][j] for j in verts] + [Fraction(-1), ZERO] for i in verts]
    rows.append([ONE] * k + [ZERO, ONE])
    return rows


def _strict_point(cons: list[tuple[list[Fraction], Fraction]], m: int) -> list[Fraction] | None:
    """A rational x with ``a.x + b > 0`` for every ``(a, b)``, or None.

    Fourier-Motzkin elimination from the last variable down; strictness is
    preserved by every combination, so the final constant test is exact.
    """
    stages = [cons]
    for v in range(m - 1, -1, -1):
        cur = stages[-1]
        pos = [c for c in cur if c[0][v] > 0]
        neg = [c for c in cur if c[0][v] < 0]
        nxt = [c for c in cur if c[0][v] == 0]
        seen = set()
        for ap, bp in pos:
            for an, bn in neg:
                s, r = -an[v], ap[v]
                a = [s * x + r * y for x, y in zip(ap, an)]
                b = s * bp + r * bn
                key = (tuple(a), b)
                if key not in seen:
                    seen.add(key)
                    nxt.append((a, b))
        stages.append(nxt)
    if any(b <= 0 for _, b in stages[-1]):
        return None
    x = [ZERO] * m
    for v in range(m):
        lo = hi = None
        for a, b in stages[m - v - 1]:
            if a[v] == 0:
                continue
            # a[v] x_v + (rest) > 0 with the earlier coordinates already fixed
            rest = b + sum(a[k] * x[k] for k in range(v))
            bound = -rest / a[v]
            if a[v] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None and hi is None:
            x[v] = ZERO
        elif hi is None:
            x[v] = lo + 1
        elif lo is None:
            x[v] = hi - 1
        else:
            x[v] = (lo + hi) / 2
    return x


def _positive_face_point(W: WCCG, verts: Sequence[int]) -> list[Fraction] | None:
    """A strictly positive KKT solution on the face ``verts``, or None."""
    k = len(verts)
    rows = _face_system(W, verts)
    pivots, ok = _rref(rows, k + 1)
    if not ok:
        return None
    free = [c for c in range(k) if c not in pivots]
    m = len(free)
    cons = []
    pivot_expr = {}
    for r, c in enumerate(pivots):
        if c == k:
            continue
        # u_c = rhs - sum_f rows[r][f] * x_f
        a = [-rows[r][f] for f in free]
        b = rows[r][k + 1]
        pivot_expr[c] = (a, b)
        cons.append((a, b))
    for idx in range(m):
        cons.append(([ONE if j == idx else ZERO for j in range(m)], ZERO))
    x = _strict_point(cons, m)
    if x is None:
        return None
    u = [ZERO] * k
    for idx, f in enumerate(free):
        u[f] = x[idx]
    for c, (a, b) in pivot_expr.items():
        u[c] = b + sum(ai * xi for ai, xi in zip(a, x))
    return u


def _support_key(s: tuple[int, ...]):
    return (-len(s), s)


def maximize_exact(W: WCCG) -> LagrangianResult:
    """Exact global maximum of ``g`` by support enumeration (t <= 16)."""
    t = W.t
    if t > EXACT_MAX_T:
        raise BudgetError(f"t = {t} exceeds the exact limit {EXACT_MAX_T}; use maximize_iterative")
    num, den, best, sing = _backend.kkt_scan(W.doubled_weights(), t)
    # multiplier of the doubled system equals 2 * u A u^T = 4 g
    g = Fraction(num, 4 * den)
    points = {}
    for mask in best:
        points[_mask_vertices(mask)] = None
    for mask in sing:
        verts = _mask_vertices(mask)
        pt = _positive_face_point(W, verts)
        if pt is not None:
            points[verts] = pt
    supports = tuple(sorted(points, key=_support_key))
    top = supports[0]
    pt = points[top]
    if pt is None:
        rows = _face_system(W, top)
        pivots, _ = _rref(rows, len(top) + 1)
        pt = [rows[r][len(top) + 1] for r, c in enumerate(pivots) if c < len(top)]
    u = [ZERO] * t
    for v, val in zip(top, pt):
        u[v] = val
    witness = SimplexDistribution(tuple(u))
    if evaluate_g(W, witness) != g:
        raise AssertionError("internal error: witness does not attain the maximum")
    return LagrangianResult(g, witness, tuple(range(t)) in points, supports)


def is_dense(W: WCCG) -> bool:
    """True iff the maximum is attained only at points with full support."""
    return maximize_exact(W).dense


# -------------------------------------------------------- iterative solver

N_STARTS = 32


def _starts(t: int) -> list[np.ndarray]:
    out = [np.full(t, 1.0 / t)]
    for s in range(1, N_STARTS):
        v = (s - 1) % t
        bias = 0.5 if (s - 1) // t % 2 == 0 else 0.9
        u = np.full(t, (1.0 - bias) / t)
        u[v] += bias
        out.append(u)
    return out


def _polish(A: np.ndarray, u: np.ndarray, cutoff: float) -> np.ndarray | None:
    # solve the KKT system on the numerical support of u
    S = np.flatnonzero(u > cutoff)
    k = len(S)
    M = np.zeros((k + 1, k + 1))
    M[:k, :k] = A[np.ix_(S, S)]
    M[:k, k] = -1.0
    M[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    try:
        sol = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError:
        return None
    if np.any(sol[:k] <= 0):
        return None
    out = np.zeros_like(u)
    out[S] = sol[:k]
    return out


def maximize_iterative(W: WCCG, max_iters: int = 20000, tol: float = 1e-12) -> ApproxLagrangianResult:
    """Replicator ascent ``u_i <- u_i (A u)_i / (u A u)`` from 32 fixed starts."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    t = W.t
    A = np.array([[float(w) for w in row] for row in W.weights])
    U = np.array(_starts(t))
    done = np.zeros(len(U), dtype=bool)
    iters = np.zeros(len(U), dtype=int)
    for it in range(1, max_iters + 1):
        act = ~done
        if not act.any():
            break
        Ua = U[act]
        AU = Ua @ A
        val = np.einsum("ij,ij->i", Ua, AU)
        zero = val <= 0.0
        NU = Ua * AU / np.where(zero, 1.0, val)[:, None]
        NU /= np.where(zero, 1.0, NU.sum(axis=1))[:, None]
        NU[zero] = Ua[zero]
        step = np.max(np.abs(NU - Ua), axis=1)
        idx = np.flatnonzero(act)
        U[idx] = NU
        iters[idx] = it
        done[idx[zero | (step < tol)]] = True
    best_val, best_u, best_conv, best_it = -1.0, None, False, 0
    for k in range(len(U)):
        u = U[k]
        val = float(u @ A @ u)
        polished = _polish(A, u, 1e-7)
        if polished is not None:
            pv = float(polished @ A @ polished)
            if pv >= val - 1e-12:
                u, val = polished, pv
        if val > best_val + 1e-15:
            best_val, best_u, best_conv, best_it = val, u, bool(done[k]), int(iters[k])
    return ApproxLagrangianResult(best_val / 2.0, tuple(float(x) for x in best_u),
                                  bool(np.all(best_u > 1e-9)), best_conv, best_it)


# ------------------------------------------------------ closed-form density

W356_SIZES = {"C5": 5, "K4": 4, "K3": 3, "K2": 2}
W37_SIZES = {"C8": 8, "K5": 5, "C5": 5, "K4": 4, "C4": 4, "K3": 3, "K2": 2}
COMPONENT_ORDER = ("C8", "K5", "C5", "K4", "C4", "K3", "K2")


def w_structure_density_356(t: int, p: int, q: int, r: int, s: int) -> Fraction:
    """``2g`` of W(p, q, r, s) on t vertices: ``1 - 30/(30t - 75p - 72q - 45r - 20s)``.

    p, q, r, s count vertex-disjoint half C5, K4, K3, K2; all other pairs are full.
    """
    if min(t, p, q, r, s) < 0:
        raise ValueError("arguments must be nonnegative")
    if 5 * p + 4 * q + 3 * r + 2 * s > t:
        raise ValueError("structure does not fit in t vertices")
    return 1 - Fraction(30, 30 * t - 75 * p - 72 * q - 45 * r - 20 * s)


def w_structure_density_37(t: int, l1: int, l2: int, l3: int, l4: int, l5: int, l6: int,
                           l7: int) -> Fraction:
    """``2g`` for half C8, K5, C5, K4, C4, K3, K2 counted by l1..l7."""
    ls = (l1, l2, l3, l4, l5, l6, l7)
    if t < 0 or min(ls) < 0:
        raise ValueError("arguments must be nonnegative")
    if 8 * l1 + 5 * l2 + 5 * l3 + 4 * l4 + 4 * l5 + 3 * l6 + 2 * l7 > t:
        raise ValueError("structure does not fit in t vertices")
    cost = 120 * l1 + 100 * l2 + 75 * l3 + 72 * l4 + 60 * l5 + 45 * l6 + 20 * l7
    return 1 - Fraction(30, 30 * t - cost)


def _component_pairs(kind: str, verts: Sequence[int]) -> list[tuple[int, int]]:
    k = len(verts)
    if kind[0] == "C":
        return [(verts[i], verts[(i + 1) % k]) for i in range(k)]
    return [(verts[i], verts[j]) for i in range(k) for j in range(i + 1, k)]


def build_w_structure(t: int, counts: Mapping[str, int] | None = None,
                      components: Sequence[tuple[str, Sequence[int]]] = (),
                      color: EdgeColor = RED) -> WCCG:
    """All-red K_t whose listed components carry half edges; every other pair is full.

    ``counts`` maps component names (C8, K5, C5, K4, C4, K3, K2) to how many
    copies to place on consecutive vertices; ``components`` lists explicit
    ``(kind, vertices)`` placements instead.
    """
    placed: list[tuple[str, list[int]]] = []
    nxt = 0
    for kind in COMPONENT_ORDER:
        for _ in range((counts or {}).get(kind, 0)):
            size = W37_SIZES[kind]
            placed.append((kind, list(range(nxt, nxt + size))))
            nxt += size
    extra = set(counts or {}) - set(COMPONENT_ORDER)
    if extra:
        raise ValueError(f"unknown component kinds {sorted(extra)}")
    for kind, verts in components:
        if kind not in W37_SIZES or len(verts) != W37_SIZES[kind]:
            raise ValueError(f"bad component {kind} on {verts}")
        placed.append((kind, list(verts)))
    used: set[int] = set()
    half = set()
    for kind, verts in placed:
        if any(v < 0 or v >= t for v in verts):
            raise ValueError("structure does not fit in t vertices")
        if used & set(verts):
            raise ValueError("components overlap")
        used |= set(verts)
        for a, b in _component_pairs(kind, verts):
            half.add((min(a, b), max(a, b)))
    pairs = {(i, j): (color, HALF if (i, j) in half else ONE)
             for i in range(t) for j in range(i + 1, t)}
    return WCCG.from_pairs(t, [color] * t, pairs)


# ----------------------------------------------------------------- bounds

def half_degree_bound(t: int, lam: int) -> Fraction:
    """``1 - 1/t - lam/(2t)``: the ``2g`` ceiling when every vertex meets >= lam half edges."""
    if not 0 <= lam < t:
        raise ValueError("need 0 <= lam < t")
    return 1 - Fraction(1, t) - Fraction(lam, 2 * t)


def vertex_deletion_bound_check(W: WCCG, x: int, k: int) -> bool:
    """``g(W - x) <= (1 - 1/k)/2`` implies ``g(W) <= (1 - 1/(k + 1))/2``."""
    if W.t < 2 or k < 1:
        raise ValueError("need t >= 2 and k >= 1")
    sub = maximize_exact(W.delete_vertex(x)).g_max
    if sub > Fraction(k - 1, 2 * k):
        return True
    return maximize_exact(W).g_max <= Fraction(k, 2 * (k + 1))


def join_full(W1: WCCG, W2: WCCG, color: EdgeColor = RED) -> WCCG:
    """Disjoint union of W1 and W2 plus every cross pair as a full edge of ``color``."""
    t1, t = W1.t, W1.t + W2.t
    pairs = {}
    for i, j, c, w in W1.pairs():
        pairs[(i, j)] = (c, w)
    for i, j, c, w in W2.pairs():
        pairs[(i + t1, j + t1)] = (c, w)
    for i in range(t1):
        for j in range(t1, t):
            pairs[(i, j)] = (color, ONE)
    return WCCG.from_pairs(t, list(W1.vertex_colors) + list(W2.vertex_colors), pairs)


# ----------------------------------------------------------- beta search

@dataclass(frozen=True)
class BetaResult:
    two_g: Fraction
    witness: WCCG | None
    leaves: int
    nodes: int


_EDGE_OPTIONS = ((RED, ONE), (EdgeColor.BLUE, ONE), (RED, HALF), (EdgeColor.BLUE, HALF))


def beta_search(p: int, q: int, t_max: int, node_budget: int = 50_000_000) -> BetaResult:
    """Largest ``2g`` over K_t(w), t <= t_max, with no red generalized K_p and no blue K_q.

    Exhaustive over sorted vertex colorings, edge colors and weights in {1/2, 1}.
    Branches are cut when the optimistic bound (every open pair full) cannot
    beat the incumbent, and leaves are deduplicated by canonical form.
    """
    from .canon import wccg_canonical_form
    from .genclique import PartialGen

    if t_max > 6:
        raise BudgetError("beta_search supports t_max <= 6")
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    best = Fraction(-1)
    best_w: WCCG | None = None
    stats = [0, 0]
    memo: dict[bytes, Fraction] = {}

    for t in range(1, t_max + 1):
        pairs = [(i, j) for j in range(t) for i in range(j)]
        for nblue in range(t, -1, -1):
            vcols = [EdgeColor.BLUE] * nblue + [RED] * (t - nblue)
            state = PartialGen(t, vcols)
            if state.has(RED, p) or state.has(EdgeColor.BLUE, q):
                continue
            w2 = [0 if i == j else 2 for i in range(t) for j in range(t)]
            assign: dict[tuple[int, int], tuple[EdgeColor, Fraction]] = {}

            def bound() -> Fraction:
                num, den, _, _ = _backend.kkt_scan(w2, t)
                return Fraction(num, 2 * den)

            def rec(k: int, cur_bound: Fraction) -> None:
                nonlocal best, best_w
                stats[1] += 1
                if stats[1] > node_budget:
                    raise BudgetError("beta_search node budget exceeded")
                if cur_bound <= best:
                    return
                if k == len(pairs):
                    stats[0] += 1
                    W = WCCG.from_pairs(t, vcols, dict(assign))
                    key = wccg_canonical_form(W)
                    val = memo.get(key)
                    if val is None:
                        val = memo[key] = maximize_exact(W).two_g
                    if val > best:
                        best, best_w = val, W
                    return
                i, j = pairs[k]
                for c, w in _EDGE_OPTIONS:
                    state.set_pair(i, j, c, w)
                    if not (state.has(RED, p) or state.has(EdgeColor.BLUE, q)):
                        assign[(i, j)] = (c, w)
                        if w == HALF:
                            w2[i * t + j] = w2[j * t + i] = 1
                            rec(k + 1, bound())
                            w2[i * t + j] = w2[j * t + i] = 2
                        else:
                            rec(k + 1, cur_bound)
                        del assign[(i, j)]
                    state.clear_pair(i, j)

            rec(0, bound())
    if best_w is None:
        # not even a single vertex is admissible
        return BetaResult(Fraction(0), None, stats[0], stats[1])
    return BetaResult(best, best_w, stats[0], stats[1])
