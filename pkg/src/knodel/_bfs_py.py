"""Pure-Python BFS kernels; reference implementation for ``_bfs_ext``.

Both kernels see the graph only through ``half`` and the offset list, with
``u_j -> j`` and ``v_j -> half + j``.
"""
from collections import deque

import numpy as np


def bfs(half, offsets, source):
    """Distances from flat id ``source``; -1 marks unreachable vertices."""
    offs = [int(a) % half for a in offsets]
    n = 2 * half
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    pop, push = queue.popleft, queue.append
    while queue:
        x = pop()
        d = dist[x] + 1
        if x < half:
            for a in offs:
                y = half + (x + a) % half
                if dist[y] < 0:
                    dist[y] = d
                    push(y)
        else:
            j = x - half
            for a in offs:
                y = (j - a) % half
                if dist[y] < 0:
                    dist[y] = d
                    push(y)
    return np.asarray(dist, dtype=np.int32)


def all_pairs_max(half, offsets):
    """Largest finite distance over all sources, or -1 if disconnected."""
    best = 0
    for src in range(2 * half):
        dist = bfs(half, offsets, src)
        if dist.min() < 0:
            return -1
        best = max(best, int(dist.max()))
    return best
