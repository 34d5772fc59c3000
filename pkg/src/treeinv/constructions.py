"""Named tree families, their closed-form invariant values, and subtree moves.

The families here are the claimed extremizers: paths and stars, pendant-heavy
"dumbbells" (maximum uniformity sum for a fixed internal count), balanced
spiders (minimum uniformity sum when internal vertices dominate), and binary
caterpillars (every internal vertex at nearest-leaf distance one).
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidParameters, NotASubtreeCut
from .invariants import profile_fast, summarize
from .tree import Tree, from_edge_list


def path(n: int) -> Tree:
    """The path on n vertices; the endpoints are ids 0 and n-1."""
    if n < 1:
        raise InvalidParameters(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """The star on n vertices, hub at id 0."""
    if n < 1:
        raise InvalidParameters(f"star needs n >= 1, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def starlike(legs: Sequence[int]) -> Tree:
    """Spider: paths of the given lengths, one end of each glued at id 0.

    Three or more legs give a genuine branch vertex; fewer are accepted and
    degenerate to a path.
    """
    legs = list(legs)
    if not legs or any(l < 1 for l in legs):
        raise InvalidParameters(f"leg lengths must be positive, got {legs}")
    edges = []
    next_id = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
    return from_edge_list(next_id, edges)


def dumbbell(k: int, a: int, b: int) -> Tree:
    """Path of k internal vertices with a pendant leaves at one end, b at the other.

    Ids 0..k-1 are the internal path; the pendants follow.  Needs a, b >= 1
    so both path ends really are internal (k = n-1 is impossible: every tree
    has at least two leaves).
    """
    if k < 1 or a < 1 or b < 1:
        raise InvalidParameters(f"dumbbell needs k, a, b >= 1, got ({k}, {a}, {b})")
    edges = [(i, i + 1) for i in range(k - 1)]
    next_id = k
    for _ in range(a):
        edges.append((0, next_id))
        next_id += 1
    for _ in range(b):
        edges.append((k - 1, next_id))
        next_id += 1
    return from_edge_list(next_id, edges)


def binary_caterpillar(spine: int) -> Tree:
    """Path of `spine` vertices with one pendant leaf at each interior spine vertex.

    Ids 0..spine-1 are the spine; every internal vertex then has degree three
    and sits at distance one from a leaf.
    """
    if spine < 1:
        raise InvalidParameters(f"binary caterpillar needs spine >= 1, got {spine}")
    edges = [(i, i + 1) for i in range(spine - 1)]
    next_id = spine
    for i in range(1, spine - 1):
        edges.append((i, next_id))
        next_id += 1
    return from_edge_list(next_id, edges)


# -- closed-form invariant values ---------------------------------------------


def formula_uni_path(n: int) -> int:
    """Maximum uniformity sum among trees of order n: (n^2-2n+1)/4 odd, (n^2-2n)/4 even."""
    if n < 2:
        raise InvalidParameters(f"needs n >= 2, got {n}")
    if n % 2:
        return (n * n - 2 * n + 1) // 4
    return (n * n - 2 * n) // 4


def formula_uni_dumbbell_max(k: int) -> int:
    """Maximum uniformity sum with k internal vertices: (k^2+2k+1)/4 odd, (k^2+2k)/4 even."""
    if k < 1:
        raise InvalidParameters(f"needs k >= 1, got {k}")
    if k % 2:
        return (k * k + 2 * k + 1) // 4
    return (k * k + 2 * k) // 4


def formula_ld_star(n: int) -> int:
    """Largest distance sum in the star: 1 + 2(n-2)."""
    if n < 2:
        raise InvalidParameters(f"needs n >= 2, got {n}")
    return 2 * n - 3


def formula_ld_path(n: int) -> int:
    """Largest distance sum in the path: n(n-1)/2."""
    if n < 2:
        raise InvalidParameters(f"needs n >= 2, got {n}")
    return n * (n - 1) // 2


def formula_delta_star(n: int) -> int:
    """Ecc-uni gap sum of the star: 2(n-1), the minimum over all trees."""
    if n < 2:
        raise InvalidParameters(f"needs n >= 2, got {n}")
    return 2 * (n - 1)


def formula_uni_min(n: int, k: int) -> int:
    """Minimum uniformity sum among trees of order n with k internal vertices.

    Equals k while leaves are plentiful (k <= floor(n/2)); beyond that the
    minimizer is a balanced spider with n-k legs, whose value has no closed
    form and is computed from the construction.
    """
    if n < 3 or not 1 <= k <= n - 2:
        raise InvalidParameters(f"no tree of order {n} has {k} internal vertices")
    if k <= n // 2:
        return k
    m = n - k
    base, extra = divmod(n - 1, m)
    legs = [base + 1] * extra + [base] * (m - extra)
    t = starlike(legs)
    return summarize(t, profile_fast(t)).uni_sum


# -- proof transformation ------------------------------------------------------


def move_subtree(
    t: Tree, from_vertex: int, to_vertex: int, subtree_root_neighbors: set[int]
) -> Tree:
    """Detach the branches hanging at the listed neighbors of one vertex and
    reattach them at another.

    The cut components must not contain the reattachment vertex, otherwise
    the result would not be a tree (NotASubtreeCut).  An empty neighbor set
    is the identity.
    """
    moved = set(subtree_root_neighbors)
    if not moved:
        return t
    for x in moved:
        if x not in t.adj[from_vertex]:
            raise NotASubtreeCut(f"{x} is not a neighbor of {from_vertex}")
    # Main component = everything still reachable from the cut vertex.
    visited = {from_vertex}
    queue = [from_vertex]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in t.adj[u]:
            if u == from_vertex and v in moved:
                continue
            if v not in visited:
                visited.add(v)
                queue.append(v)
    if to_vertex not in visited:
        raise NotASubtreeCut(
            f"vertex {to_vertex} sits inside a moved branch of {from_vertex}"
        )
    edges = []
    for u, v in t.edges():
        if (u == from_vertex and v in moved) or (v == from_vertex and u in moved):
            continue
        edges.append((u, v))
    edges.extend((to_vertex, x) for x in sorted(moved))
    return from_edge_list(t.n, edges)
