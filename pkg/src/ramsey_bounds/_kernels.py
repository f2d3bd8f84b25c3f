"""Bitset clique-search kernels.

Adjacency is a ``(n, nwords)`` uint64 array, bit ``v & 63`` of word
``v >> 6`` in row ``u`` set iff ``u ~ v``. Every function here is written in
the subset of Python that numba compiles, and runs unchanged (slowly) as
plain numpy code when compilation is disabled.
"""

import numpy as np

from ._jit import njit

_ZERO = np.uint64(0)
_ONE = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_LOW16 = np.uint64(0xFFFF)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S8 = np.uint64(8)
_S16 = np.uint64(16)
_S32 = np.uint64(32)
_S6 = np.uint64(6)
_BYTE = np.uint64(0x7F)


def pack_adjacency(mask):
    """Pack a boolean ``(n, n)`` matrix into ``(n, nwords)`` uint64 rows."""
    mask = np.asarray(mask, dtype=bool)
    n = mask.shape[0]
    nwords = max(1, (n + 63) // 64)
    padded = np.zeros((n, nwords * 64), dtype=bool)
    padded[:, :n] = mask
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False).reshape(n, nwords)


@njit
def popcount64(x):
    # SWAR without the final multiply, which would overflow numpy scalars
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    x = x + (x >> _S8)
    x = x + (x >> _S16)
    x = x + (x >> _S32)
    return np.int64(x & _BYTE)


@njit
def ctz64(x):
    """Index of the lowest set bit of a nonzero word."""
    n = 0
    while (x & _LOW16) == _ZERO:
        x = x >> _S16
        n += 16
    while (x & _ONE) == _ZERO:
        x = x >> _S1
        n += 1
    return n


@njit
def _color_sort(adj, cand, order, colors, u_buf, q_buf, kmin):
    """Greedy sequential coloring of ``cand``.

    Writes vertices into ``order`` with nondecreasing color numbers in
    ``colors``; vertices whose color is below ``kmin`` are omitted since
    they can never survive the bound. Returns the number written.
    """
    nw = cand.shape[0]
    for w in range(nw):
        u_buf[w] = cand[w]
    m = 0
    color = 0
    remaining = 0
    for w in range(nw):
        remaining += popcount64(u_buf[w])
    while remaining > 0:
        color += 1
        for w in range(nw):
            q_buf[w] = u_buf[w]
        for w in range(nw):
            while q_buf[w] != _ZERO:
                b = ctz64(q_buf[w])
                bit = _ONE << np.uint64(b)
                q_buf[w] &= ~bit
                u_buf[w] &= ~bit
                remaining -= 1
                v = w * 64 + b
                for w2 in range(w, nw):
                    q_buf[w2] &= ~adj[v, w2]
                if color >= kmin:
                    order[m] = v
                    colors[m] = color
                    m += 1
    return m


@njit
def bb_clique_search(adj, k_stop, best_init, budget):
    """Depth-first branch and bound for a clique.

    Finds a clique larger than ``best_init`` and keeps improving it, stopping
    as soon as one of size ``k_stop`` is recorded. A branch is cut when the
    candidate count, or the greedy color count of the candidates, cannot lift
    the current clique past the incumbent. ``budget < 0`` means unbounded.

    Returns ``(best, witness, nodes, complete)``; ``witness[:best]`` holds the
    vertices of the best clique found when ``best > best_init``, and
    ``complete`` is False only if the node budget ran out.
    """
    n = adj.shape[0]
    nw = adj.shape[1]
    cap = k_stop
    if cap > n:
        cap = n
    cap += 1
    cand = np.zeros((cap, nw), dtype=np.uint64)
    order = np.zeros((cap, n), dtype=np.int64)
    colors = np.zeros((cap, n), dtype=np.int64)
    cnt = np.zeros(cap, dtype=np.int64)
    u_buf = np.zeros(nw, dtype=np.uint64)
    q_buf = np.zeros(nw, dtype=np.uint64)
    clique = np.zeros(n + 1, dtype=np.int64)
    witness = np.zeros(n + 1, dtype=np.int64)
    best = best_init
    nodes = 0
    for v in range(n):
        cand[0, v >> 6] |= _ONE << np.uint64(v & 63)

    depth = 0
    expand = True
    while True:
        if expand:
            expand = False
            nodes += 1
            if budget >= 0 and nodes > budget:
                return best, witness, nodes, False
            size = 0
            for w in range(nw):
                size += popcount64(cand[depth, w])
            if depth + size <= best:
                cnt[depth] = 0
            else:
                cnt[depth] = _color_sort(
                    adj, cand[depth], order[depth], colors[depth], u_buf, q_buf, best - depth + 1
                )
        i = cnt[depth] - 1
        if i < 0 or depth + colors[depth, i] <= best:
            if depth == 0:
                break
            depth -= 1
            continue
        cnt[depth] = i
        v = order[depth, i]
        cand[depth, v >> 6] &= ~(_ONE << np.uint64(v & 63))
        clique[depth] = v
        if depth + 1 > best:
            best = depth + 1
            for j in range(best):
                witness[j] = clique[j]
            if best >= k_stop:
                return best, witness, nodes, True
        any_left = False
        for w in range(nw):
            x = cand[depth, w] & adj[v, w]
            cand[depth + 1, w] = x
            if x != _ZERO:
                any_left = True
        if any_left:
            depth += 1
            expand = True
    return best, witness, nodes, True
