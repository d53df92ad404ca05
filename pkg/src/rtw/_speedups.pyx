# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as :mod:`rtw._pure`."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    typedef __int128 rtw_i128;
    static inline int rtw_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int rtw_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    """
    ctypedef long long i128 "rtw_i128"
    int rtw_ctz(unsigned long long x) nogil
    int rtw_popcount(unsigned long long x) nogil

DEF MAXT = 16


cdef int _scan_one(int64_t* w2, int t, unsigned int mask,
                   int64_t* out_num, int64_t* out_den) noexcept nogil:
    """Returns 0 inconsistent, 1 nonsingular positive, 2 nonsingular not
    positive, 3 singular consistent."""
    cdef i128 a[MAXT + 1][MAXT + 2]
    cdef int idx[MAXT]
    cdef int piv[MAXT + 1]
    cdef int k = 0, i, j, c, r, rank, nrows, ncols
    cdef i128 prev, p, f, tmp
    for i in range(t):
        if (mask >> i) & 1:
            idx[k] = i
            k += 1
    nrows = k + 1
    ncols = k + 1
    for i in range(k):
        for j in range(k):
            a[i][j] = w2[idx[i] * t + idx[j]]
        a[i][k] = -1
        a[i][k + 1] = 0
    for j in range(k):
        a[k][j] = 1
    a[k][k] = 0
    a[k][k + 1] = 1
    prev = 1
    rank = 0
    for c in range(ncols):
        piv[c] = -1
        r = rank
        while r < nrows and a[r][c] == 0:
            r += 1
        if r == nrows:
            continue
        if r != rank:
            for j in range(ncols + 1):
                tmp = a[r][j]
                a[r][j] = a[rank][j]
                a[rank][j] = tmp
        p = a[rank][c]
        for i in range(nrows):
            if i == rank:
                continue
            f = a[i][c]
            for j in range(ncols + 1):
                a[i][j] = (p * a[i][j] - f * a[rank][j]) / prev
        prev = p
        piv[c] = rank
        rank += 1
    for i in range(rank, nrows):
        if a[i][ncols] != 0:
            return 0
    cdef i128 num = a[piv[k]][ncols]
    cdef i128 den = prev
    if den < 0:
        num = -num
        den = -den
    out_num[0] = <int64_t>num
    out_den[0] = <int64_t>den
    for c in range(k):
        if piv[c] < 0:
            return 3
    for c in range(k):
        tmp = a[piv[c]][ncols]
        if prev > 0:
            if tmp <= 0:
                return 2
        else:
            if tmp >= 0:
                return 2
    return 1


def kkt_scan(w2_list, int t):
    if t < 1 or t > MAXT:
        raise ValueError("kkt_scan supports 1 <= t <= 16")
    cdef int64_t w2[MAXT * MAXT]
    cdef int i
    for i in range(t * t):
        w2[i] = w2_list[i]
    cdef int64_t best_num = -1, best_den = 1, num = 0, den = 1
    cdef unsigned int mask, top = (1u << t)
    cdef int status
    cdef i128 lhs, rhs
    best = []
    sing = []
    for mask in range(1, top):
        status = _scan_one(w2, t, mask, &num, &den)
        if status == 3:
            sing.append((mask, num, den))
        elif status == 1:
            lhs = <i128>num * best_den
            rhs = <i128>best_num * den
            if lhs > rhs:
                best_num = num
                best_den = den
                best = [mask]
            elif lhs == rhs:
                best.append(mask)
    sing_best = [m for (m, n, d) in sing
                 if <i128>(<int64_t>n) * best_den == <i128>best_num * (<int64_t>d)]
    return best_num, best_den, best, sing_best


# ---------------------------------------------------------------- cliques

cdef struct CliqueCtx:
    int n
    int words
    uint64_t* adj      # n * words
    uint64_t* stack    # (n + 2) * words candidate sets per depth
    uint64_t* scratch  # 2 * words
    int* chosen
    int* best
    int best_size
    int target


cdef inline int _count(uint64_t* s, int words) noexcept nogil:
    cdef int i, c = 0
    for i in range(words):
        c += rtw_popcount(s[i])
    return c


cdef int _color_bound(CliqueCtx* ctx, uint64_t* cand) noexcept nogil:
    cdef int words = ctx.words
    cdef uint64_t* rest = ctx.scratch
    cdef uint64_t* avail = ctx.scratch + words
    cdef int colors = 0, i, w, v
    cdef uint64_t low
    cdef uint64_t* av
    memcpy(rest, cand, words * sizeof(uint64_t))
    while _count(rest, words) > 0:
        colors += 1
        memcpy(avail, rest, words * sizeof(uint64_t))
        w = 0
        while w < words:
            if avail[w] == 0:
                w += 1
                continue
            low = avail[w] & (~avail[w] + 1)
            v = w * 64 + rtw_ctz(avail[w])
            rest[w] &= ~low
            avail[w] &= ~low
            av = ctx.adj + v * words
            for i in range(words):
                avail[i] &= ~av[i]
    return colors


cdef int _dfs(CliqueCtx* ctx, int depth) noexcept nogil:
    cdef int words = ctx.words
    cdef uint64_t* cand = ctx.stack + depth * words
    cdef uint64_t* nxt = ctx.stack + (depth + 1) * words
    cdef int size = depth, need, w, v, i
    cdef uint64_t low
    cdef uint64_t* av
    if size > ctx.best_size:
        ctx.best_size = size
        for i in range(size):
            ctx.best[i] = ctx.chosen[i]
        if ctx.target > 0 and size >= ctx.target:
            return 1
    need = ctx.target if ctx.target > 0 else ctx.best_size + 1
    if size + _count(cand, words) < need:
        return 0
    if size + _color_bound(ctx, cand) < need:
        return 0
    w = 0
    while w < words:
        if cand[w] == 0:
            w += 1
            continue
        low = cand[w] & (~cand[w] + 1)
        v = w * 64 + rtw_ctz(cand[w])
        cand[w] &= ~low
        need = ctx.target if ctx.target > 0 else ctx.best_size + 1
        if size + 1 + _count(cand, words) < need:
            return 0
        av = ctx.adj + v * words
        for i in range(words):
            nxt[i] = cand[i] & av[i]
        ctx.chosen[size] = v
        if _dfs(ctx, depth + 1):
            return 1
    return 0


cdef list _run_clique(list adj, int target):
    cdef int n = len(adj)
    cdef int words = (n + 63) // 64 if n > 0 else 1
    cdef CliqueCtx ctx
    cdef int v, i
    cdef object row
    if n == 0:
        return []
    ctx.n = n
    ctx.words = words
    ctx.adj = <uint64_t*>malloc(n * words * sizeof(uint64_t))
    ctx.stack = <uint64_t*>malloc((n + 2) * words * sizeof(uint64_t))
    ctx.scratch = <uint64_t*>malloc(2 * words * sizeof(uint64_t))
    ctx.chosen = <int*>malloc((n + 1) * sizeof(int))
    ctx.best = <int*>malloc((n + 1) * sizeof(int))
    try:
        mask64 = (1 << 64) - 1
        for v in range(n):
            row = adj[v]
            for i in range(words):
                ctx.adj[v * words + i] = <uint64_t>((row >> (64 * i)) & mask64)
        memset(ctx.stack, 0, (n + 2) * words * sizeof(uint64_t))
        for v in range(n):
            ctx.stack[v // 64] |= (<uint64_t>1) << (v % 64)
        ctx.best_size = 0
        ctx.target = target
        with nogil:
            _dfs(&ctx, 0)
        return [ctx.best[i] for i in range(ctx.best_size)]
    finally:
        free(ctx.adj)
        free(ctx.stack)
        free(ctx.scratch)
        free(ctx.chosen)
        free(ctx.best)


def max_clique(adj):
    return _run_clique(list(adj), 0)


def find_clique(adj, int k):
    if k <= 0:
        return []
    res = _run_clique(list(adj), k)
    return res if len(res) >= k else None
