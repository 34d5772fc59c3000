"""Free-tree value type, validation, Pruefer bijection and canonical coding.

Vertices are always the dense integers 0..n-1.  A :class:`Tree` is immutable
once built; every public constructor funnels through :func:`from_edge_list`
so that all trees in the system, generated or parsed, are validated the same
way.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EntryOutOfRange,
    FormatError,
    IdOutOfRange,
    InvalidParameters,
    SelfLoop,
    WrongEdgeCount,
)

# A canonical code is a level sequence: the depth of every vertex in a
# preorder walk of the tree rooted at its center, subtrees in sorted order.
# Two trees carry the same code exactly when they are isomorphic.
CanonicalCode = tuple[int, ...]


@dataclass(frozen=True, repr=False)
class Tree:
    """Immutable free tree given by sorted adjacency lists.

    Attributes:
        n: number of vertices.
        adj: for each vertex id, the sorted tuple of neighbor ids.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        # Flat adjacency (indptr, indices), shared by the numeric kernels.
        degrees = [len(nbrs) for nbrs in self.adj]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter(
            (v for nbrs in self.adj for v in nbrs),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices

    def __repr__(self) -> str:
        shown = self.edges()[:12]
        tail = ", ..." if self.n - 1 > len(shown) else ""
        return f"Tree(n={self.n}, edges={shown}{tail})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate an edge list and build the tree it describes.

    Raises IdOutOfRange, SelfLoop, DuplicateEdge, Disconnected or
    WrongEdgeCount, in that order of detection.
    """
    if n < 1:
        raise InvalidParameters(f"a tree needs at least one vertex, got n={n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    count = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} repeated")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        count += 1

    # Connectivity first: it gives the more specific diagnostic when both
    # the count and the connectivity are wrong (e.g. two small components).
    reached = 1
    visited = bytearray(n)
    visited[0] = 1
    queue = [0]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in adj[u]:
            if not visited[v]:
                visited[v] = 1
                reached += 1
                queue.append(v)
    if reached != n:
        raise Disconnected(f"only {reached} of {n} vertices reachable from 0")
    if count != n - 1:
        raise WrongEdgeCount(f"expected {n - 1} edges for n={n}, got {count}")

    return Tree(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def leaves(t: Tree) -> set[int]:
    """Degree-1 vertices; for n=1 the sole vertex counts as a leaf."""
    if t.n == 1:
        return {0}
    return {v for v in range(t.n) if len(t.adj[v]) == 1}


def internal_count(t: Tree) -> int:
    """Number of non-leaf vertices."""
    return t.n - len(leaves(t))


# -- Pruefer bijection -------------------------------------------------------

def from_pruefer(seq: list[int]) -> Tree:
    """Decode a Pruefer sequence into the labeled tree it encodes (n = len + 2)."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise EntryOutOfRange(f"entry {x} outside 0..{n - 1}")
        degree[x] += 1

    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    a = heapq.heappop(heap)
    b = heapq.heappop(heap)
    edges.append((a, b))
    return from_edge_list(n, edges)


def to_pruefer(t: Tree) -> list[int]:
    """Encode a tree (n >= 2) by repeated removal of the smallest leaf."""
    if t.n < 2:
        raise InvalidParameters("Pruefer encoding needs n >= 2")
    n = t.n
    degree = [len(nbrs) for nbrs in t.adj]
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(heap)
        degree[leaf] = 0
        for v in t.adj[leaf]:
            if degree[v] > 0:
                seq.append(v)
                degree[v] -= 1
                if degree[v] == 1:
                    heapq.heappush(heap, v)
                break
    return seq


# -- canonical coding --------------------------------------------------------

def _centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices, by iterated leaf stripping."""
    if t.n <= 2:
        return list(range(t.n))
    degree = [len(nbrs) for nbrs in t.adj]
    layer = [v for v in range(t.n) if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            degree[u] = 0
            for v in t.adj[u]:
                if degree[v] > 1:
                    degree[v] -= 1
                    if degree[v] == 1:
                        nxt.append(v)
        layer = nxt
    return sorted(layer)


def _bfs_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """Vertices in BFS order from root, plus the parent of each (root: -1)."""
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in t.adj[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
    parent[root] = -1
    return order, parent


def _rooted_code(t: Tree, root: int) -> CanonicalCode:
    # Subtree codes are merged bottom-up; children sorted descending so the
    # code is the lexicographically largest preorder level sequence.
    order, parent = _bfs_order(t, root)
    code: list[CanonicalCode | None] = [None] * t.n
    for v in reversed(order):
        kids = sorted(
            (code[u] for u in t.adj[v] if u != parent[v]),
            reverse=True,
        )
        seq = [0]
        for kid in kids:
            seq.extend(level + 1 for level in kid)
        code[v] = tuple(seq)
    result = code[root]
    assert result is not None
    return result


def canonical_code(t: Tree) -> CanonicalCode:
    """Relabeling-invariant code; equal codes iff isomorphic free trees.

    The tree is rooted at its center; for bicentral trees both rootings are
    coded and the lexicographically smaller code wins.
    """
    return min(_rooted_code(t, root) for root in _centers(t))


# -- text interchange formats -------------------------------------------------

def to_edge_text(t: Tree) -> str:
    """Edge-list format: first line n, then n-1 lines "u v" (sorted, LF)."""
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"


def from_edge_text(text: str) -> Tree:
    """Parse the edge-list format (inverse of :func:`to_edge_text`)."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"bad vertex count line: {lines[0]!r}") from exc
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    return from_edge_list(n, edges)


def to_pruefer_text(t: Tree) -> str:
    """Pruefer format: line with n, then one line of n-2 entries."""
    return f"{t.n}\n" + " ".join(map(str, to_pruefer(t))) + "\n"


def from_pruefer_text(text: str) -> Tree:
    """Parse the Pruefer format (inverse of :func:`to_pruefer_text`)."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"bad vertex count line: {lines[0]!r}") from exc
    if n < 2:
        raise FormatError("Pruefer format needs n >= 2")
    body = lines[1].split() if len(lines) > 1 else []
    try:
        seq = [int(x) for x in body]
    except ValueError as exc:
        raise FormatError("bad Pruefer entries") from exc
    if len(seq) != n - 2:
        raise FormatError(f"expected {n - 2} entries for n={n}, got {len(seq)}")
    return from_pruefer(seq)
