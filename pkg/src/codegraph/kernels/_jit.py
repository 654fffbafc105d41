"""numba kernels. Same signatures as :mod:`codegraph.kernels._np`.

Adjacency arrays are ``uint8`` n x n, distance arrays ``int64`` with -1 for
unreachable pairs.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def bfs_distances(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for v in range(n):
                if adj[u, v] and dist[s, v] < 0:
                    dist[s, v] = dist[s, u] + 1
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def resolves(dist, members):
    n = dist.shape[0]
    k = members.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            same = True
            for j in range(k):
                w = members[j]
                if dist[a, w] != dist[b, w]:
                    same = False
                    break
            if same:
                return False
    return True


@njit(cache=True)
def first_resolving_set(dist, k):
    """Lexicographically first resolving k-subset, or an empty array."""
    n = dist.shape[0]
    if k > n:
        return np.empty(0, np.int64)
    idx = np.arange(k).astype(np.int64)
    while True:
        if resolves(dist, idx):
            return idx.copy()
        # advance to the next k-combination
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return np.empty(0, np.int64)
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


@njit(cache=True)
def _has_resolving(dist, k):
    return first_resolving_set(dist, k).shape[0] > 0


@njit(cache=True)
def has_forbidden_threshold(adj):
    """Any induced P4, C4 or 2K2 on four vertices."""
    n = adj.shape[0]
    deg = np.zeros(4, np.int64)
    q = np.zeros(4, np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    q[0] = a
                    q[1] = b
                    q[2] = c
                    q[3] = d
                    m = 0
                    for i in range(4):
                        deg[i] = 0
                    for i in range(4):
                        for j in range(i + 1, 4):
                            if adj[q[i], q[j]]:
                                m += 1
                                deg[i] += 1
                                deg[j] += 1
                    if m == 2:
                        # 2K2 iff every vertex has degree 1
                        if deg[0] == 1 and deg[1] == 1 and deg[2] == 1 and deg[3] == 1:
                            return True
                    elif m == 3:
                        # P4 iff no degree-0 and no degree-3 vertex
                        ok = True
                        for i in range(4):
                            if deg[i] == 0 or deg[i] == 3:
                                ok = False
                        if ok:
                            return True
                    elif m == 4:
                        if deg[0] == 2 and deg[1] == 2 and deg[2] == 2 and deg[3] == 2:
                            return True
    return False


@njit(cache=True)
def has_forbidden_chain(adj):
    """Any induced 2K2, C3 or C5."""
    n = adj.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            if not adj[a, b]:
                continue
            for c in range(b + 1, n):
                if adj[a, c] and adj[b, c]:
                    return True
    # 2K2: two edges with no edges between them
    for a in range(n):
        for b in range(a + 1, n):
            if not adj[a, b]:
                continue
            for c in range(a + 1, n):
                if c == b:
                    continue
                for d in range(c + 1, n):
                    if d == b or not adj[c, d]:
                        continue
                    if not (adj[a, c] or adj[a, d] or adj[b, c] or adj[b, d]):
                        return True
    q = np.zeros(5, np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    for e in range(d + 1, n):
                        q[0] = a
                        q[1] = b
                        q[2] = c
                        q[3] = d
                        q[4] = e
                        two_regular = True
                        for i in range(5):
                            di = 0
                            for j in range(5):
                                if i != j and adj[q[i], q[j]]:
                                    di += 1
                            if di != 2:
                                two_regular = False
                                break
                        if two_regular:
                            # a 2-regular graph on five vertices is C5
                            return True
    return False


@njit(cache=True)
def l21_search(dist, span, order, twin_prev):
    """Backtracking L(2,1) labeling with colors in [0, span].

    ``order`` is the vertex visiting order; ``twin_prev[i]`` is the position
    of an earlier twin of ``order[i]`` (or -1), whose color must be smaller.
    Returns the per-vertex colors or an empty array when infeasible.
    """
    n = order.shape[0]
    col = np.full(dist.shape[0], -1, np.int64)
    nxt = np.zeros(n + 1, np.int64)
    i = 0
    while i >= 0:
        if i == n:
            return col
        v = order[i]
        c = nxt[i]
        if twin_prev[i] >= 0:
            floor = col[order[twin_prev[i]]] + 1
            if c < floor:
                c = floor
        while c <= span:
            ok = True
            for j in range(i):
                u = order[j]
                d = dist[u, v]
                if d == 1:
                    if abs(col[u] - c) < 2:
                        ok = False
                        break
                elif d == 2:
                    if col[u] == c:
                        ok = False
                        break
            if ok:
                break
            c += 1
        if c <= span:
            col[v] = c
            nxt[i] = c + 1
            i += 1
            nxt[i] = 0
        else:
            col[v] = -1
            i -= 1
    return np.empty(0, np.int64)


@njit(cache=True)
def min_beta_supersets(adj, eu, ev, threshold_only, upper):
    """Minimum metric dimension over edge-supersets of ``adj``.

    Supersets add any subset of the candidate non-edges ``(eu[i], ev[i])``.
    Only values below ``upper`` are searched for; returns ``upper`` when no
    qualifying superset does better, and -1 when ``threshold_only`` filtered
    out every superset.
    """
    m = eu.shape[0]
    best = upper
    seen = False
    h = adj.copy()
    for mask in range(1 << m):
        for i in range(m):
            bit = (mask >> i) & 1
            h[eu[i], ev[i]] = bit
            h[ev[i], eu[i]] = bit
        if threshold_only and has_forbidden_threshold(h):
            continue
        seen = True
        dist = bfs_distances(h)
        for k in range(1, best):
            if _has_resolving(dist, k):
                best = k
                break
        if best <= 1:
            break
    if not seen:
        return -1
    return best
