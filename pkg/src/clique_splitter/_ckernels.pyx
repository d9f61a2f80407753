# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled clique kernels over multi-word bitsets.

Twin of ``_pykernels``: same functions, same deterministic results. Python
integer bitsets are unpacked into uint64 word arrays at the boundary; the
branch-and-bound and Bron-Kerbosch recursions run on preallocated per-depth
buffers.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef extern from *:
    """
    #include <stdint.h>
    static inline int cs_popcount64(uint64_t x){ return __builtin_popcountll(x); }
    static inline int cs_ctz64(uint64_t x){ return __builtin_ctzll(x); }
    """
    int cs_popcount64(unsigned long long x) nogil
    int cs_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

cdef u64 WORD_MASK = <u64>0xFFFFFFFFFFFFFFFF


cdef inline bint _is_zero(u64* row, int words) noexcept nogil:
    cdef int w
    for w in range(words):
        if row[w]:
            return False
    return True


cdef inline int _first_bit(u64* row, int words) noexcept nogil:
    cdef int w
    for w in range(words):
        if row[w]:
            return (w << 6) + cs_ctz64(row[w])
    return -1


cdef inline void _clear_bit(u64* row, int v) noexcept nogil:
    row[v >> 6] &= ~((<u64>1) << (v & 63))


cdef u64* _alloc(size_t count) except NULL:
    cdef u64* ptr = <u64*> PyMem_Malloc(count * sizeof(u64))
    if ptr == NULL:
        raise MemoryError()
    return ptr


cdef int* _alloc_int(size_t count) except NULL:
    cdef int* ptr = <int*> PyMem_Malloc(count * sizeof(int))
    if ptr == NULL:
        raise MemoryError()
    return ptr


cdef void _fill_words(object bits, u64* row, int words):
    cdef int w
    for w in range(words):
        row[w] = <u64> ((bits >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)


cdef object _words_to_int(u64* row, int words):
    out = 0
    cdef int w
    for w in range(words):
        if row[w]:
            out |= (<object> row[w]) << (64 * w)
    return out


# ---------------------------------------------------------------------------
# Max clique (Tomita-style branch and bound with greedy coloring bounds)

cdef struct MCtx:
    int n
    int words
    u64* adj
    u64* lane_unc
    u64* lane_cls
    u64* lane_cur
    u64* lane_child
    int* order
    int* bound
    int best
    int stop_at


cdef void _expand(MCtx* ctx, u64* cand, int size, int depth) noexcept nogil:
    cdef int words = ctx.words
    cdef int i, w, v, color, count
    cdef u64* unc
    cdef u64* cls
    cdef u64* cur
    cdef u64* child
    cdef u64* row
    cdef int* order
    cdef int* bound
    if size > ctx.best:
        ctx.best = size
    if ctx.stop_at and ctx.best >= ctx.stop_at:
        return
    if _is_zero(cand, words):
        return
    unc = ctx.lane_unc + depth * words
    cls = ctx.lane_cls + depth * words
    cur = ctx.lane_cur + depth * words
    child = ctx.lane_child + (depth + 1) * words
    order = ctx.order + depth * ctx.n
    bound = ctx.bound + depth * ctx.n
    for w in range(words):
        unc[w] = cand[w]
        cur[w] = cand[w]
    color = 0
    count = 0
    while not _is_zero(unc, words):
        color += 1
        for w in range(words):
            cls[w] = unc[w]
        while True:
            v = _first_bit(cls, words)
            if v < 0:
                break
            order[count] = v
            bound[count] = color
            count += 1
            _clear_bit(unc, v)
            _clear_bit(cls, v)
            row = ctx.adj + v * words
            for w in range(words):
                cls[w] &= ~row[w]
    for i in range(count - 1, -1, -1):
        if size + bound[i] <= ctx.best:
            return
        if ctx.stop_at and ctx.best >= ctx.stop_at:
            return
        v = order[i]
        _clear_bit(cur, v)
        row = ctx.adj + v * words
        for w in range(words):
            child[w] = cur[w] & row[w]
        _expand(ctx, child, size + 1, depth + 1)


def max_clique_size(adj, mask, int stop_at=0):
    """Largest clique size within ``mask``; with ``stop_at > 0`` the search
    may stop once a clique that large is known."""
    cdef int n = len(adj)
    if n == 0 or mask == 0:
        return 0
    cdef int words = (n + 63) >> 6
    cdef int v
    cdef MCtx ctx
    ctx.n = n
    ctx.words = words
    ctx.best = 0
    ctx.stop_at = stop_at
    ctx.adj = _alloc(<size_t> n * words)
    ctx.lane_unc = _alloc(<size_t> (n + 2) * words)
    ctx.lane_cls = _alloc(<size_t> (n + 2) * words)
    ctx.lane_cur = _alloc(<size_t> (n + 2) * words)
    ctx.lane_child = _alloc(<size_t> (n + 2) * words)
    ctx.order = _alloc_int(<size_t> (n + 1) * n)
    ctx.bound = _alloc_int(<size_t> (n + 1) * n)
    try:
        for v in range(n):
            _fill_words(adj[v], ctx.adj + v * words, words)
        _fill_words(mask, ctx.lane_child, words)
        _expand(&ctx, ctx.lane_child, 0, 0)
        return ctx.best
    finally:
        PyMem_Free(ctx.adj)
        PyMem_Free(ctx.lane_unc)
        PyMem_Free(ctx.lane_cls)
        PyMem_Free(ctx.lane_cur)
        PyMem_Free(ctx.lane_child)
        PyMem_Free(ctx.order)
        PyMem_Free(ctx.bound)


def has_clique_of_size(adj, mask, int size):
    if size <= 0:
        return True
    return max_clique_size(adj, mask, size) >= size


# ---------------------------------------------------------------------------
# Maximal clique enumeration (Bron-Kerbosch with max-degree pivot)

cdef struct BCtx:
    int n
    int words
    u64* adj
    u64* lane_p
    u64* lane_x
    u64* lane_ext
    int* rbuf


cdef void _bk(BCtx* ctx, u64* p, u64* x, int rlen, int depth, list out):
    cdef int words = ctx.words
    cdef int w, v, u, cnt, best_cnt, pivot, i
    cdef u64* row
    cdef u64* ext
    cdef u64* child_p
    cdef u64* child_x
    cdef u64 scan
    if _is_zero(p, words) and _is_zero(x, words):
        mask = 0
        for i in range(rlen):
            # Python-object shift: vertex indices can exceed the C int width.
            mask = mask | ((<object> 1) << ctx.rbuf[i])
        out.append(mask)
        return
    # pivot: vertex of P|X with the most neighbors in P
    pivot = -1
    best_cnt = -1
    for w in range(words):
        scan = p[w] | x[w]
        while scan:
            u = (w << 6) + cs_ctz64(scan)
            scan &= scan - 1
            row = ctx.adj + u * words
            cnt = 0
            for v in range(words):
                cnt += cs_popcount64(p[v] & row[v])
            if cnt > best_cnt:
                best_cnt = cnt
                pivot = u
    ext = ctx.lane_ext + depth * words
    row = ctx.adj + pivot * words
    for w in range(words):
        ext[w] = p[w] & ~row[w]
    child_p = ctx.lane_p + (depth + 1) * words
    child_x = ctx.lane_x + (depth + 1) * words
    while True:
        v = _first_bit(ext, words)
        if v < 0:
            break
        _clear_bit(ext, v)
        row = ctx.adj + v * words
        for w in range(words):
            child_p[w] = p[w] & row[w]
            child_x[w] = x[w] & row[w]
        ctx.rbuf[rlen] = v
        _bk(ctx, child_p, child_x, rlen + 1, depth + 1, out)
        _clear_bit(p, v)
        x[v >> 6] |= (<u64>1) << (v & 63)


def maximal_cliques(adj, mask):
    """All maximal cliques within ``mask`` as bitsets, deterministic order."""
    cdef int n = len(adj)
    out: list = []
    if n == 0 or mask == 0:
        return out
    cdef int words = (n + 63) >> 6
    cdef int v, w
    cdef BCtx ctx
    ctx.n = n
    ctx.words = words
    ctx.adj = _alloc(<size_t> n * words)
    ctx.lane_p = _alloc(<size_t> (n + 2) * words)
    ctx.lane_x = _alloc(<size_t> (n + 2) * words)
    ctx.lane_ext = _alloc(<size_t> (n + 2) * words)
    ctx.rbuf = _alloc_int(<size_t> (n + 1))
    try:
        for v in range(n):
            _fill_words(adj[v], ctx.adj + v * words, words)
        _fill_words(mask, ctx.lane_p, words)
        for w in range(words):
            ctx.lane_x[w] = 0
        _bk(&ctx, ctx.lane_p, ctx.lane_x, 0, 0, out)
        return out
    finally:
        PyMem_Free(ctx.adj)
        PyMem_Free(ctx.lane_p)
        PyMem_Free(ctx.lane_x)
        PyMem_Free(ctx.lane_ext)
        PyMem_Free(ctx.rbuf)
