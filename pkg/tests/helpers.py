"""Shared test utilities: reference BFS, relabeling, tree strategies."""

from __future__ import annotations

import random
from collections import deque
from functools import lru_cache

from hypothesis import strategies as st

from treeinv import Tree, free_trees, from_edge_list, from_pruefer


def reference_distance_table(t: Tree) -> list[list[int]]:
    """Plain deque-BFS distance table; shares no code with the library routes."""
    table = []
    for source in range(t.n):
        dist = [-1] * t.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in t.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        table.append(dist)
    return table


def relabeled(t: Tree, seed: int) -> Tree:
    """The same tree under a seed-deterministic random permutation of ids."""
    rng = random.Random(seed)
    perm = list(range(t.n))
    rng.shuffle(perm)
    return from_edge_list(t.n, [(perm[u], perm[v]) for u, v in t.edges()])


@lru_cache(maxsize=None)
def all_trees_up_to(max_n: int) -> tuple[Tree, ...]:
    """Every free tree of order 1..max_n, materialized once per session."""
    return tuple(t for n in range(1, max_n + 1) for t in free_trees(n))


def pruefer_trees(min_n: int = 2, max_n: int = 40) -> st.SearchStrategy[Tree]:
    """Random labeled trees via uniform Pruefer sequences."""
    return (
        st.integers(min_n, max_n)
        .flatmap(
            lambda n: st.lists(
                st.integers(0, n - 1), min_size=n - 2, max_size=n - 2
            )
        )
        .map(from_pruefer)
    )
