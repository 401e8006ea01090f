# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS kernels; same contract as ``knodel._bfs_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _bfs(long half, const long[:] offs, long source, int[:] dist, long[:] queue) noexcept nogil:
    cdef long n = 2 * half, head = 0, tail = 0, x, y, j, k, m = offs.shape[0]
    cdef int d
    for x in range(n):
        dist[x] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        d = dist[x] + 1
        if x < half:
            for k in range(m):
                y = half + (x + offs[k]) % half
                if dist[y] < 0:
                    dist[y] = d
                    queue[tail] = y
                    tail += 1
        else:
            j = x - half
            for k in range(m):
                y = (j - offs[k]) % half
                if y < 0:
                    y += half
                if dist[y] < 0:
                    dist[y] = d
                    queue[tail] = y
                    tail += 1


def _reduced(long half, offsets):
    return np.ascontiguousarray(np.asarray(offsets, dtype=np.int64) % half, dtype=np.int64)


def bfs(long half, offsets, long source):
    cdef long[:] offs = _reduced(half, offsets)
    dist = np.empty(2 * half, dtype=np.int32)
    cdef int[:] dv = dist
    cdef long[:] queue = np.empty(2 * half, dtype=np.int64)
    with nogil:
        _bfs(half, offs, source, dv, queue)
    return dist


def all_pairs_max(long half, offsets):
    cdef long[:] offs = _reduced(half, offsets)
    cdef int[:] dv = np.empty(2 * half, dtype=np.int32)
    cdef long[:] queue = np.empty(2 * half, dtype=np.int64)
    cdef long src, x, n = 2 * half
    cdef int best = 0
    with nogil:
        for src in range(n):
            _bfs(half, offs, src, dv, queue)
            for x in range(n):
                if dv[x] < 0:
                    best = -1
                    break
                if dv[x] > best:
                    best = dv[x]
            if best < 0:
                break
    return best
