"""Slow, obviously-correct reference implementations used only by the tests.

None of these share code with the package beyond the data types.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

from rtw.model import BLUE, RED, ColoredGraph, WCCG


def solve_fraction(M: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; None if M is singular."""
    n = len(M)
    A = [row[:] + [b[i]] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[r][n] for r in range(n)]


def lagrangian_max(W: WCCG) -> Fraction:
    """Max of sum w_ij u_i u_j over the simplex.

    Some optimum with minimal support has a nonsingular bordered KKT matrix,
    so it suffices to solve that system on every support and keep positive
    solutions.
    """
    t = W.t
    best = Fraction(0)
    for k in range(1, t + 1):
        for S in combinations(range(t), k):
            M = [[W.weights[i][j] for j in S] + [Fraction(-1)] for i in S]
            M.append([Fraction(1)] * k + [Fraction(0)])
            sol = solve_fraction(M, [Fraction(0)] * k + [Fraction(1)])
            if sol is None or any(x <= 0 for x in sol[:k]):
                continue
            u = dict(zip(S, sol[:k]))
            val = sum((W.weights[i][j] * u[i] * u[j] for i, j in combinations(S, 2)), Fraction(0))
            best = max(best, val)
    return best


def genclique_max(W: WCCG, color) -> int:
    """Largest |X| + |Y| straight from the definition."""
    t = W.t

    def ok_pair(i, j, need_full):
        w = W.weights[i][j]
        return W.colors[i][j] is color and (w == 1 if need_full else w >= Fraction(1, 2))

    best = 0
    for k in range(t + 1):
        for X in combinations(range(t), k):
            if not all(ok_pair(i, j, False) for i, j in combinations(X, 2)):
                continue
            cand = [v for v in X if W.vertex_colors[v] is color]
            for m in range(len(cand), -1, -1):
                if k + m <= best:
                    break
                if any(all(ok_pair(i, j, True) for i, j in combinations(Y, 2))
                       for Y in combinations(cand, m)):
                    best = k + m
                    break
    return best


def has_mono_clique(c: ColoredGraph, color, ell: int) -> bool:
    M = c.matrix()
    return any(all(M[i][j] is color for i, j in combinations(S, 2))
               for S in combinations(range(c.n), ell))


def isomorphic(a: ColoredGraph, b: ColoredGraph) -> bool:
    if a.n != b.n:
        return False
    Ma, Mb = a.matrix(), b.matrix()
    return any(all(Ma[i][j] is Mb[p[i]][p[j]] for i, j in combinations(range(a.n), 2))
               for p in permutations(range(a.n)))


def ramsey_classes(n: int, p: int, q: int) -> list[ColoredGraph]:
    """Every 2-coloring of K_n, filtered and reduced up to isomorphism by brute force."""
    pairs = list(combinations(range(n), 2))
    reps: list[ColoredGraph] = []
    for bits in product((RED, BLUE), repeat=len(pairs)):
        c = ColoredGraph(n, [(i, j, col) for (i, j), col in zip(pairs, bits)])
        if has_mono_clique(c, RED, p) or has_mono_clique(c, BLUE, q):
            continue
        if not any(isomorphic(c, r) for r in reps):
            reps.append(c)
    return reps


def independence(adj: list[set[int]]) -> int:
    n = len(adj)
    for k in range(n, 0, -1):
        for S in combinations(range(n), k):
            if all(b not in adj[a] for a, b in combinations(S, 2)):
                return k
    return 0


def eps_regular(edges: set, X, Y, eps) -> bool:
    def dens(A, B):
        return Fraction(sum((a, b) in edges or (b, a) in edges for a in A for b in B), len(A) * len(B))

    d = dens(X, Y)
    for kx in range(1, len(X) + 1):
        if kx < eps * len(X):
            continue
        for ky in range(1, len(Y) + 1):
            if ky < eps * len(Y):
                continue
            for A in combinations(X, kx):
                for B in combinations(Y, ky):
                    if abs(dens(A, B) - d) > eps:
                        return False
    return True
