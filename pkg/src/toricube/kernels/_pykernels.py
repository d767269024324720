"""Pure-Python histogram kernels; same results as the compiled module."""

from __future__ import annotations

MAX_N = 30

PAREN_STAT = 0
BRACKET_STAT = 1
FORKS = 2

NC_STAT = 0
NC_BLOCKS = 1
NC_FILLERS = 2


def _tree_value(word, n, i, j, mode):
    if mode == FORKS:
        return sum(1 for a in word if a >= 2)
    lo = n - j
    m = 0
    stack = []
    for p in range(1, n + 1):
        a = word[p - 1]
        if not a:
            stack.append(p)
            continue
        kids = stack[-a:]
        del stack[-a:]
        at_root = p == n
        first = True
        for c in kids:
            leaf = word[c - 1] == 0
            if leaf:
                if mode == BRACKET_STAT:
                    kind = 0 if first else 1
                else:
                    kind = 0 if first and not at_root else 1
            else:
                kind = 2 if first else -1
            if kind == 0:
                m += 1
            elif kind == 1 and (c <= i or c >= lo):
                m += 1
            elif kind == 2 and c >= lo:
                m += 1
            first = False
        stack.append(p)
    return m


def tree_histogram(n: int, i: int, j: int, mode: int) -> list[int]:
    """Histogram of a tree statistic over all plane trees on ``n`` vertices."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}")
    hist = [0] * (n + 1)
    word = [0] * n

    def extend(pos, height):
        if pos == n - 1:
            a = height
            word[pos] = a
            hist[_tree_value(word, n, i, j, mode)] += 1
            return
        for a in range(height + 1):
            word[pos] = a
            extend(pos + 1, height - a + 1)

    if n == 1:
        hist[_tree_value([0], 1, i, j, mode)] += 1
    else:
        word[0] = 0
        extend(1, 1)
    return hist


def _nc_value(assign, nblocks, n, d, i, j, mode):
    bmin = [0] * nblocks
    bmax = [0] * nblocks
    bsize = [0] * nblocks
    for v in range(1, n + 1):
        b = assign[v]
        if not bsize[b]:
            bmin[b] = v
        bmax[b] = v
        bsize[b] += 1
    if mode == NC_BLOCKS:
        return sum(1 for s in bsize if s > 1)
    if mode == NC_FILLERS:
        m = 0
        for v in range(2, n + 1):
            b = assign[v]
            if assign[v - 1] == b and bmax[b] == v:
                m += 1
            elif bsize[b] == 1 and bmax[assign[v - 1]] != v - 1:
                m += 1
        return m
    lo = d - j
    m = 0
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


def nc_histogram(n: int, d: int, i: int, j: int, mode: int) -> list[int]:
    """Histogram of a statistic over all noncrossing partitions of ``{1..n}``."""
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n must lie in 0..{MAX_N}")
    hist = [0] * (n + 1)
    assign = [0] * (n + 1)

    def place(x, stack, nblocks):
        if x > n:
            hist[_nc_value(assign, nblocks, n, d, i, j, mode)] += 1
            return
        assign[x] = nblocks
        place(x + 1, stack + [nblocks], nblocks + 1)
        for depth in range(len(stack)):
            assign[x] = stack[depth]
            place(x + 1, stack[: depth + 1], nblocks)

    place(1, [], 0)
    return hist
