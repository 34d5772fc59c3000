"""Exhaustive free-tree streams and uniform random labeled trees.

Free trees are generated as canonical level sequences: vertices in preorder,
each entry the depth of a vertex, principal subtrees in non-increasing
lexicographic order, rooted so that the second-tallest principal subtree is
at most one shorter than the tallest (with size and lexicographic tie-breaks
for equal heights).  Successive sequences are produced in decreasing
lexicographic order by backtrack-and-copy, which jumps straight from one
canonical free tree to the next in constant amortized time.

A brute-force census that decodes every Pruefer sequence and deduplicates by
canonical code is kept as the independent oracle for small orders.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InfeasibleFilter, InvalidParameters, OrderTooLarge
from .tree import Tree, canonical_code, from_edge_list, from_pruefer, internal_count

DEFAULT_MAX_ORDER = 18
MAX_ORDER_ENV_VAR = "TREEINV_MAX_ORDER"


def resolve_max_order(max_order: int | None = None) -> int:
    """Effective enumeration cap: explicit argument, else env var, else default."""
    if max_order is not None:
        return max_order
    env = os.environ.get(MAX_ORDER_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_ORDER


# -- canonical level-sequence machinery ----------------------------------------


def _first_layout(n: int) -> list[int]:
    # The path rooted at its middle vertex: the lexicographically largest
    # canonical free layout, hence the start of the descending stream.
    return list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))


def _next_rooted_layout(layout: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (descending order).

    Backtracks at the last entry deeper than 1 (or at p if given), then tiles
    the tail with the segment starting at the backtrack point's new parent.
    """
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_first_subtree(layout: list[int]) -> tuple[list[int], list[int]]:
    """(first principal subtree, tree with that subtree removed), as layouts."""
    m = len(layout)
    seen_one = False
    for i, level in enumerate(layout):
        if level == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    first = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return first, rest


def _is_free_canonical(layout: list[int]) -> bool:
    """Does this rooted layout canonically represent a free tree?

    The first principal subtree must not out-height the rest of the tree, and
    on equal heights must not out-size it nor follow it lexicographically.
    """
    first, rest = _split_first_subtree(layout)
    if not first:
        return len(layout) <= 2
    first_height = max(first)
    rest_height = max(rest)
    if rest_height > first_height:
        return True
    if rest_height < first_height:
        return False
    if len(first) > len(rest):
        return False
    if len(first) == len(rest) and first > rest:
        return False
    return True


def _jump_past_invalid(layout: list[int]) -> list[int] | None:
    """From an invalid layout, step to the next candidate free layout.

    Backtracking happens at the end of the oversized first subtree; if that
    position was deeper than 2 the tail is re-tiled with a maximal path so no
    valid layout in between is skipped.
    """
    first, _ = _split_first_subtree(layout)
    p = len(first)
    succ = _next_rooted_layout(layout, p)
    if succ is None:
        return None
    if layout[p] > 2:
        new_first, _ = _split_first_subtree(succ)
        suffix = range(1, max(new_first) + 2)
        succ[-len(suffix):] = suffix
    return succ


def _layout_to_tree(layout: list[int]) -> Tree:
    # Preorder guarantees a vertex's parent is the latest shallower-by-one one.
    last_at_level = [0] * (max(layout) + 1)
    edges = []
    for i in range(1, len(layout)):
        level = layout[i]
        edges.append((last_at_level[level - 1], i))
        last_at_level[level] = i
    return from_edge_list(len(layout), edges)


def _layout_leaf_count(layout: list[int]) -> int:
    # In preorder a vertex's children follow it immediately one level deeper,
    # so a vertex is a leaf iff its successor is not deeper (or it is last).
    n = len(layout)
    if n == 1:
        return 1
    return sum(
        1
        for i in range(n)
        if i == n - 1 or layout[i + 1] <= layout[i]
    )


def canonical_layouts(n: int, max_order: int | None = None) -> Iterator[list[int]]:
    """The canonical level sequences behind :func:`free_trees`, cheapest form.

    Striped consumers can filter and count layouts without paying for tree
    materialization; do not mutate the yielded lists.
    """
    cap = resolve_max_order(max_order)
    if not 1 <= n <= cap:
        raise OrderTooLarge(f"order {n} outside 1..{cap}")
    if n == 1:
        yield [0]
        return
    layout: list[int] | None = _first_layout(n)
    while layout is not None:
        if _is_free_canonical(layout):
            yield layout
            layout = _next_rooted_layout(layout)
        else:
            layout = _jump_past_invalid(layout)


def free_trees(n: int, max_order: int | None = None) -> Iterator[Tree]:
    """Every isomorphism class of free trees of order n, exactly once.

    The stream is deterministic (descending canonical level sequences) and
    restartable: two iterations yield the identical sequence of trees.
    """
    for layout in canonical_layouts(n, max_order):
        yield _layout_to_tree(layout)


def feasible_internal_counts(n: int) -> list[int]:
    """Internal-vertex counts that occur among trees of order n."""
    if n <= 2:
        return [0]
    return list(range(1, n - 1))


def free_trees_with_internal(
    n: int, k: int, max_order: int | None = None
) -> Iterator[Tree]:
    """The free-tree stream of order n filtered to exactly k internal vertices."""
    if k not in feasible_internal_counts(n):
        raise InfeasibleFilter(f"no tree of order {n} has {k} internal vertices")
    return (t for t in free_trees(n, max_order) if internal_count(t) == k)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree (uniform Pruefer sequence), seed-deterministic."""
    if n < 2:
        raise InvalidParameters(f"random tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    return from_pruefer([rng.randrange(n) for _ in range(n - 2)])


def pruefer_dedup_count(n: int) -> int:
    """Number of free trees of order n, counted the slow way.

    Decodes all n^(n-2) Pruefer sequences and deduplicates by canonical code;
    the independent oracle for the generated stream.  Exponential: n <= 8 or
    so only.
    """
    if n == 1:
        return 1
    codes = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        codes.add(canonical_code(from_pruefer(list(seq))))
    return len(codes)


def stripe(items: Iterable, worker: int, workers: int) -> Iterator:
    """Every workers-th item starting at index worker; partitions a stream."""
    if not 0 <= worker < workers:
        raise InvalidParameters(f"worker {worker} outside 0..{workers - 1}")
    return itertools.islice(items, worker, None, workers)


@dataclass(frozen=True)
class TreeUniverse:
    """A quantification domain for claims: an order, an optional internal-count
    filter, and a source (exhaustive stream or random Pruefer samples)."""

    n: int
    k: int | None = None
    source: str = "exhaustive_canonical"
    seed: int | None = None
    count: int | None = None

    def trees(self, max_order: int | None = None) -> Iterator[Tree]:
        if self.source == "exhaustive_canonical":
            if self.k is None:
                return free_trees(self.n, max_order)
            return free_trees_with_internal(self.n, self.k, max_order)
        if self.source == "random_pruefer":
            if self.seed is None or self.count is None:
                raise InvalidParameters("random_pruefer universe needs seed and count")
            return (
                random_tree(self.n, self.seed + i) for i in range(self.count)
            )
        raise InvalidParameters(f"unknown universe source {self.source!r}")
