"""Pure-numpy fallback kernels, selected with ``CODEGRAPH_NO_NUMBA=1``.

Whatever vectorizes (all-sources BFS, resolving-set batches, induced
subgraph classification) is done with array operations; the L(2,1)
backtracking has no array form and runs as plain Python.
"""

from itertools import combinations

import numpy as np

NAME = "numpy"

# combos are checked in slabs to bound memory
_SLAB = 4096


def bfs_distances(adj):
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    dist = np.full((n, n), -1, np.int64)
    seen = np.eye(n, dtype=bool)
    frontier = seen.copy()
    dist[seen] = 0
    level = 0
    while frontier.any():
        level += 1
        # row s of the product marks vertices adjacent to the frontier of s
        frontier = (frontier.astype(np.int64) @ adj.astype(np.int64) > 0) & ~seen
        dist[frontier] = level
        seen |= frontier
    return dist


def _distinct_rows(block):
    """block: (n, C, k) -> bool (C,), True where the n rows are pairwise distinct."""
    n, c, k = block.shape
    base = int(block.max()) + 2 if block.size else 2
    if k * np.log2(base) > 62:
        return np.array([np.unique(block[:, j], axis=0).shape[0] == n for j in range(c)], dtype=bool)
    weights = base ** np.arange(k, dtype=np.int64)
    keys = (block + 1) @ weights  # (n, C)
    keys.sort(axis=0)
    return np.all(np.diff(keys, axis=0) != 0, axis=0)


def resolves(dist, members):
    dist = np.asarray(dist)
    rows = dist[:, np.asarray(members, dtype=np.int64)]
    return np.unique(rows, axis=0).shape[0] == dist.shape[0]


def first_resolving_set(dist, k):
    dist = np.asarray(dist)
    n = dist.shape[0]
    if k > n:
        return np.empty(0, np.int64)
    it = combinations(range(n), k)
    while True:
        slab = np.array([c for _, c in zip(range(_SLAB), it)], dtype=np.int64)
        if slab.size == 0:
            return np.empty(0, np.int64)
        ok = _distinct_rows(dist[:, slab])
        hit = np.flatnonzero(ok)
        if hit.size:
            return slab[hit[0]].copy()


def _quads(n):
    return np.array(list(combinations(range(n), 4)), dtype=np.int64).reshape(-1, 4)


def has_forbidden_threshold(adj):
    adj = np.asarray(adj, dtype=bool)
    q = _quads(adj.shape[0])
    if q.size == 0:
        return False
    deg = np.zeros((q.shape[0], 4), np.int64)
    m = np.zeros(q.shape[0], np.int64)
    for i, j in combinations(range(4), 2):
        e = adj[q[:, i], q[:, j]].astype(np.int64)
        m += e
        deg[:, i] += e
        deg[:, j] += e
    two_k2 = (m == 2) & np.all(deg == 1, axis=1)
    p4 = (m == 3) & np.all((deg == 1) | (deg == 2), axis=1)
    c4 = (m == 4) & np.all(deg == 2, axis=1)
    return bool(np.any(two_k2 | p4 | c4))


def has_forbidden_chain(adj):
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    a = adj.astype(np.int64)
    if np.trace(a @ a @ a) > 0:
        return True
    q = _quads(n)
    if q.size:
        deg = np.zeros((q.shape[0], 4), np.int64)
        m = np.zeros(q.shape[0], np.int64)
        for i, j in combinations(range(4), 2):
            e = adj[q[:, i], q[:, j]].astype(np.int64)
            m += e
            deg[:, i] += e
            deg[:, j] += e
        if np.any((m == 2) & np.all(deg == 1, axis=1)):
            return True
    p = np.array(list(combinations(range(n), 5)), dtype=np.int64).reshape(-1, 5)
    if p.size:
        deg = np.zeros((p.shape[0], 5), np.int64)
        for i, j in combinations(range(5), 2):
            e = adj[p[:, i], p[:, j]].astype(np.int64)
            deg[:, i] += e
            deg[:, j] += e
        if np.any(np.all(deg == 2, axis=1)):
            return True
    return False


def l21_search(dist, span, order, twin_prev):
    dist = np.asarray(dist)
    order = [int(v) for v in order]
    twin_prev = [int(p) for p in twin_prev]
    n = len(order)
    d = dist.tolist()
    col = [-1] * dist.shape[0]

    def place(i):
        if i == n:
            return True
        v = order[i]
        lo = col[order[twin_prev[i]]] + 1 if twin_prev[i] >= 0 else 0
        row = d[v]
        for c in range(lo, span + 1):
            for j in range(i):
                u = order[j]
                duv = row[u]
                if (duv == 1 and abs(col[u] - c) < 2) or (duv == 2 and col[u] == c):
                    break
            else:
                col[v] = c
                if place(i + 1):
                    return True
        col[v] = -1
        return False

    if place(0):
        return np.array(col, dtype=np.int64)
    return np.empty(0, np.int64)


def min_beta_supersets(adj, eu, ev, threshold_only, upper):
    adj = np.asarray(adj, dtype=np.uint8)
    m = len(eu)
    best = int(upper)
    seen = False
    h = adj.copy()
    for mask in range(1 << m):
        bits = (mask >> np.arange(m)) & 1
        h[eu, ev] = bits
        h[ev, eu] = bits
        if threshold_only and has_forbidden_threshold(h):
            continue
        seen = True
        dist = bfs_distances(h)
        for k in range(1, best):
            if first_resolving_set(dist, k).size:
                best = k
                break
        if best <= 1:
            break
    return best if seen else -1
