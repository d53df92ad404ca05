"""Pure-Python implementations of the hot kernels.

The compiled module ``rtw._speedups`` exposes the same three functions with
identical semantics and identical tie-breaking; :mod:`rtw._backend` picks one
at import time.

Graphs are passed as adjacency bitsets: ``adj[v]`` is an int whose bit ``w``
is set iff ``vw`` is an edge.
"""
from __future__ import annotations


def _eliminate(rows: list[list[int]], ncols: int) -> tuple[int, list[int], bool]:
    """Fraction-free Gauss-Jordan elimination in place.

    ``rows`` is an augmented matrix with ``ncols`` coefficient columns and one
    right-hand-side column. Returns ``(d, pivot_row_of_col, consistent)`` where
    every pivot entry equals ``d`` on exit and ``pivot_row_of_col[c]`` is -1
    for free columns.
    """
    nrows = len(rows)
    prev = 1
    rank = 0
    piv = [-1] * ncols
    for c in range(ncols):
        r = rank
        while r < nrows and rows[r][c] == 0:
            r += 1
        if r == nrows:
            continue
        if r != rank:
            rows[r], rows[rank] = rows[rank], rows[r]
        prow = rows[rank]
        p = prow[c]
        for i in range(nrows):
            if i == rank:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                # Bareiss scaling still applies to rows untouched by the pivot.
                for j in range(ncols + 1):
                    row[j] = (p * row[j]) // prev
            else:
                for j in range(ncols + 1):
                    row[j] = (p * row[j] - f * prow[j]) // prev
        prev = p
        piv[c] = rank
        rank += 1
    consistent = all(rows[i][ncols] == 0 for i in range(rank, nrows))
    return prev, piv, consistent


def kkt_system(w2: list[int], t: int, mask: int) -> list[list[int]]:
    """Augmented KKT system for the face spanned by ``mask``.

    Unknowns are ``u_i`` (i in mask, ascending) then ``lam``; equations are
    ``sum_j w2[i][j] u_j - lam = 0`` for i in mask and ``sum u = 1``.
    """
    idx = [i for i in range(t) if mask >> i & 1]
    k = len(idx)
    rows = []
    for i in idx:
        base = i * t
        rows.append([w2[base + j] for j in idx] + [-1, 0])
    rows.append([1] * k + [0, 1])
    return rows


def kkt_scan(w2: list[int], t: int) -> tuple[int, int, list[int], list[int]]:
    """Scan every nonempty support of the simplex.

    ``w2`` is the row-major doubled weight matrix (entries 0, 1, 2). For each
    support the KKT system is solved exactly. Returns ``(num, den, best, sing)``
    where ``num/den`` is the largest multiplier (``= 2 * u.A.u`` in the doubled
    scale) among nonsingular supports with a strictly positive solution,
    ``best`` lists those supports attaining it (ascending mask order) and
    ``sing`` lists singular, consistent supports whose multiplier equals it.
    """
    best_num, best_den = -1, 1
    best: list[int] = []
    sing: list[tuple[int, int, int]] = []
    for mask in range(1, 1 << t):
        rows = kkt_system(w2, t, mask)
        k = len(rows) - 1
        d, piv, ok = _eliminate(rows, k + 1)
        if not ok:
            continue
        lam_row = piv[k]
        num = rows[lam_row][k + 1]
        den = d
        if den < 0:
            num, den = -num, -den
        if -1 in piv[:k]:
            # singular: record the (invariant) multiplier, positivity is decided later
            sing.append((mask, num, den))
            continue
        if d > 0:
            positive = all(rows[piv[c]][k + 1] > 0 for c in range(k))
        else:
            positive = all(rows[piv[c]][k + 1] < 0 for c in range(k))
        if not positive:
            continue
        lhs, rhs = num * best_den, best_num * den
        if lhs > rhs:
            best_num, best_den = num, den
            best = [mask]
        elif lhs == rhs:
            best.append(mask)
    sing_best = [m for m, n, dd in sing if n * best_den == best_num * dd]
    return best_num, best_den, best, sing_best


def _color_bound(cand: int, adj: list[int]) -> int:
    # greedy sequential colouring in ascending vertex order
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


def _clique_dfs(adj, chosen, cand, target, state):
    # pre-order DFS in ascending vertex order == lexicographic order of cliques
    size = len(chosen)
    if size > state[0]:
        state[0] = size
        state[1] = list(chosen)
        if target and size >= target:
            return True
    if not cand:
        return False
    need = target if target else state[0] + 1
    if size + cand.bit_count() < need:
        return False
    if size + _color_bound(cand, adj) < need:
        return False
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand &= ~low
        need = target if target else state[0] + 1
        if size + 1 + cand.bit_count() < need:
            return False
        chosen.append(v)
        if _clique_dfs(adj, chosen, cand & adj[v], target, state):
            return True
        chosen.pop()
    return False


def max_clique(adj: list[int]) -> list[int]:
    """Lexicographically smallest maximum clique (sorted vertex list)."""
    n = len(adj)
    state = [0, []]
    _clique_dfs(adj, [], (1 << n) - 1, 0, state)
    return state[1]


def find_clique(adj: list[int], k: int) -> list[int] | None:
    """Lexicographically smallest clique of size ``k``, or None."""
    if k <= 0:
        return []
    n = len(adj)
    state = [0, []]
    _clique_dfs(adj, [], (1 << n) - 1, k, state)
    return state[1] if len(state[1]) >= k else None
