# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled histogram kernels over plane trees and noncrossing partitions."""

cdef enum:
    MAXN = 32

cdef int MAX_N = 30


cdef int _tree_value(int* word, int n, int i, int j, int mode) nogil:
    cdef int stack[MAXN]
    cdef int top = 0
    cdef int p, a, k, c, m = 0, lo = n - j, kind
    cdef bint first, leaf, at_root
    if mode == 2:
        for p in range(n):
            if word[p] >= 2:
                m += 1
        return m
    for p in range(1, n + 1):
        a = word[p - 1]
        if a == 0:
            stack[top] = p
            top += 1
            continue
        at_root = p == n
        for k in range(top - a, top):
            c = stack[k]
            first = k == top - a
            leaf = word[c - 1] == 0
            if leaf:
                if mode == 1:
                    kind = 0 if first else 1
                else:
                    kind = 0 if (first and not at_root) else 1
            else:
                kind = 2 if first else -1
            if kind == 0:
                m += 1
            elif kind == 1 and (c <= i or c >= lo):
                m += 1
            elif kind == 2 and c >= lo:
                m += 1
        top -= a
        stack[top] = p
        top += 1
    return m


def tree_histogram(int n, int i, int j, int mode):
    """Histogram of a tree statistic over all plane trees on ``n`` vertices."""
    if n < 1 or n > MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}")
    cdef long long hist[MAXN + 1]
    cdef int word[MAXN]
    cdef int height[MAXN + 1]
    cdef int pos, h
    for pos in range(n + 1):
        hist[pos] = 0
    with nogil:
        word[0] = 0
        if n == 1:
            hist[_tree_value(word, 1, i, j, mode)] += 1
        else:
            height[1] = 1
            pos = 1
            word[1] = -1
            while pos >= 1:
                word[pos] += 1
                if word[pos] > height[pos]:
                    pos -= 1
                    continue
                h = height[pos] - word[pos] + 1
                if pos == n - 1:
                    if h == 1:
                        hist[_tree_value(word, n, i, j, mode)] += 1
                    continue
                pos += 1
                height[pos] = h
                word[pos] = -1
    return [hist[k] for k in range(n + 1)]


cdef int _nc_value(int* assign, int nblocks, int n, int d, int i, int j, int mode) nogil:
    cdef int bmin[MAXN]
    cdef int bmax[MAXN]
    cdef int bsize[MAXN]
    cdef int v, b, m = 0, lo = d - j
    for b in range(nblocks):
        bsize[b] = 0
    for v in range(1, n + 1):
        b = assign[v]
        if bsize[b] == 0:
            bmin[b] = v
        bmax[b] = v
        bsize[b] += 1
    if mode == 1:
        for b in range(nblocks):
            if bsize[b] > 1:
                m += 1
        return m
    if mode == 2:
        for v in range(2, n + 1):
            b = assign[v]
            if assign[v - 1] == b and bmax[b] == v:
                m += 1
            elif bsize[b] == 1 and bmax[assign[v - 1]] != v - 1:
                m += 1
        return m
    for v in range(1, n + 1):
        b = assign[v]
        if bsize[b] == 1:
            if v <= i or v >= lo:
                m += 1
        elif v == bmin[b]:
            m += 1
        elif v >= lo and (v != bmax[b] or bmin[b] == 1):
            m += 1
    return m


cdef void _place(int x, int* stack, int depth, int nblocks, int* assign,
                 long long* hist, int n, int d, int i, int j, int mode) nogil:
    cdef int saved[MAXN]
    cdef int k, k2
    if x > n:
        hist[_nc_value(assign, nblocks, n, d, i, j, mode)] += 1
        return
    for k in range(depth):
        saved[k] = stack[k]
    assign[x] = nblocks
    stack[depth] = nblocks
    _place(x + 1, stack, depth + 1, nblocks + 1, assign, hist, n, d, i, j, mode)
    for k in range(depth):
        stack[k] = saved[k]
    for k in range(depth):
        assign[x] = saved[k]
        _place(x + 1, stack, k + 1, nblocks, assign, hist, n, d, i, j, mode)
        for k2 in range(depth):
            stack[k2] = saved[k2]


def nc_histogram(int n, int d, int i, int j, int mode):
    """Histogram of a statistic over all noncrossing partitions of ``{1..n}``."""
    if n < 0 or n > MAX_N:
        raise ValueError(f"n must lie in 0..{MAX_N}")
    cdef long long hist[MAXN + 1]
    cdef int assign[MAXN + 1]
    cdef int stack[MAXN]
    cdef int k
    for k in range(n + 1):
        hist[k] = 0
    with nogil:
        _place(1, stack, 0, 0, assign, hist, n, d, i, j, mode)
    return [hist[k] for k in range(n + 1)]
