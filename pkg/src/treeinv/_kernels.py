"""Compiled traversal kernels over flat (indptr, indices) adjacency.

These back the linear-time profile route only; the quadratic oracle route
never touches this module.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def bfs_tree(indptr, indices, src):
    """BFS from src: (distances, visitation order, parent per vertex)."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    dist[src] = 0
    order[0] = src
    head, tail = 0, 1
    while head < tail:
        u = order[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du
                parent[v] = u
                order[tail] = v
                tail += 1
    return dist, order, parent


@njit(cache=True)
def multi_source_distances(indptr, indices, sources):
    """Distance from every vertex to its nearest source (simultaneous BFS)."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for i in range(sources.shape[0]):
        s = sources[i]
        dist[s] = 0
        queue[tail] = s
        tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist


@njit(cache=True)
def distance_sums(order, parent, dist_root):
    """Sum of distances to all vertices, for every vertex.

    Uses the rerooting recurrence dsum(child) = dsum(parent) + n - 2*size(child),
    seeded with dsum(root) = sum of BFS distances from the root.
    """
    n = order.shape[0]
    size = np.ones(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        v = order[i]
        size[parent[v]] += size[v]
    dsum = np.empty(n, dtype=np.int64)
    total = np.int64(0)
    for i in range(n):
        total += dist_root[i]
    dsum[order[0]] = total
    for i in range(1, n):
        v = order[i]
        dsum[v] = dsum[parent[v]] + n - 2 * size[v]
    return dsum


def warm_up() -> None:
    """Force JIT compilation on a toy input (distances on a 2-path)."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    dist, order, parent = bfs_tree(indptr, indices, 0)
    multi_source_distances(indptr, indices, np.array([0, 1], dtype=np.int64))
    distance_sums(order, parent, dist)
