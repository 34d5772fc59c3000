"""Per-vertex and whole-tree distance invariants.

Two independent routes compute the same per-vertex profile:

* :func:`profile_oracle` applies the definitions literally to the full
  distance table (quadratic, obviously correct);
* :func:`profile_fast` runs linear-time algorithms: two-sweep diameter
  endpoints for eccentricity, one BFS from all leaves at once for the
  nearest-leaf distance, and two rerooting passes for distance sums.

Their exact agreement on every tree is the load-bearing property of this
module.  Everything downstream (summaries, searches, claim checks) consumes
the profile only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from . import _kernels
from .tree import Tree, leaves


@dataclass(frozen=True)
class VertexProfile:
    """Per-vertex tables: eccentricity, nearest-leaf distance, their gap, distance sum."""

    ecc: tuple[int, ...]
    uni: tuple[int, ...]
    delta: tuple[int, ...]
    dsum: tuple[int, ...]


@dataclass(frozen=True)
class InvariantSummary:
    """Whole-tree values and middle-part vertex sets derived from a profile."""

    ecc_sum: int
    uni_sum: int
    delta_sum: int
    ld: int
    wiener: int
    diameter: int
    r: int
    r_prime: int
    delta_min: int
    center: tuple[int, ...]
    centroid: tuple[int, ...]
    c_uni: tuple[int, ...]

    def to_dict(self) -> dict:
        """JSON-friendly dict (vertex sets become lists)."""
        return {
            "ecc_sum": self.ecc_sum,
            "uni_sum": self.uni_sum,
            "delta_sum": self.delta_sum,
            "ld": self.ld,
            "wiener": self.wiener,
            "diameter": self.diameter,
            "r": self.r,
            "r_prime": self.r_prime,
            "delta_min": self.delta_min,
            "center": list(self.center),
            "centroid": list(self.centroid),
            "c_uni": list(self.c_uni),
        }


def all_pairs_distances(t: Tree) -> np.ndarray:
    """The n-by-n table of BFS distances (symmetric, zero diagonal, read-only).

    Intended as the ground-truth table for the oracle route; quadratic in
    memory, so keep n modest.
    """
    indptr, indices = t._csr
    graph = csr_matrix(
        (np.ones(len(indices), dtype=np.int8), indices, indptr),
        shape=(t.n, t.n),
    )
    table = shortest_path(graph, method="D", unweighted=True)
    table = table.astype(np.int64)
    table.setflags(write=False)
    return table


def profile_oracle(t: Tree) -> VertexProfile:
    """Profile by literal application of the definitions to the distance table."""
    table = all_pairs_distances(t)
    leaf_cols = sorted(leaves(t))
    ecc = table.max(axis=1)
    uni = table[:, leaf_cols].min(axis=1)
    dsum = table.sum(axis=1)
    delta = ecc - uni
    return VertexProfile(
        ecc=tuple(ecc.tolist()),
        uni=tuple(uni.tolist()),
        delta=tuple(delta.tolist()),
        dsum=tuple(dsum.tolist()),
    )


def profile_fast(t: Tree) -> VertexProfile:
    """Profile in linear time; agrees with :func:`profile_oracle` everywhere."""
    if t.n == 1:
        return VertexProfile((0,), (0,), (0,), (0,))
    indptr, indices = t._csr
    dist0, _, _ = _kernels.bfs_tree(indptr, indices, 0)
    u = int(np.argmax(dist0))
    dist_u, order, parent = _kernels.bfs_tree(indptr, indices, u)
    w = int(np.argmax(dist_u))
    dist_w, _, _ = _kernels.bfs_tree(indptr, indices, w)
    # In a tree every eccentricity is realized at one of the two ends of a
    # longest path, so two extra sweeps give the whole table column.
    ecc = np.maximum(dist_u, dist_w)
    leaf_ids = np.flatnonzero(np.diff(indptr) == 1)
    uni = _kernels.multi_source_distances(indptr, indices, leaf_ids)
    dsum = _kernels.distance_sums(order, parent, dist_u)
    delta = ecc - uni
    return VertexProfile(
        ecc=tuple(ecc.tolist()),
        uni=tuple(uni.tolist()),
        delta=tuple(delta.tolist()),
        dsum=tuple(dsum.tolist()),
    )


def summarize(t: Tree, p: VertexProfile) -> InvariantSummary:
    """Fold a profile into the global sums, extremes and middle parts."""
    r = min(p.ecc)
    diameter = max(p.ecc)
    r_prime = max(p.uni)
    ld = max(p.dsum)
    delta_min = min(p.delta)
    return InvariantSummary(
        ecc_sum=sum(p.ecc),
        uni_sum=sum(p.uni),
        delta_sum=sum(p.delta),
        ld=ld,
        wiener=sum(p.dsum) // 2,
        diameter=diameter,
        r=r,
        r_prime=r_prime,
        delta_min=delta_min,
        center=tuple(v for v in range(t.n) if p.ecc[v] == r),
        centroid=tuple(v for v in range(t.n) if p.dsum[v] == min(p.dsum)),
        c_uni=tuple(v for v in range(t.n) if p.uni[v] == r_prime),
    )


class DeltaMinLocation(NamedTuple):
    """Where the minimum ecc-uni gap is attained, relative to the center."""

    delta_min: int
    argmin: tuple[int, ...]
    center: tuple[int, ...]
    attained_at_center: bool


def delta_min_location(t: Tree) -> DeltaMinLocation:
    """Minimum gap, its achievers, the center, and whether they intersect.

    Only reports the relationship; no claim about it is asserted here.
    """
    p = profile_fast(t)
    delta_min = min(p.delta)
    r = min(p.ecc)
    argmin = tuple(v for v in range(t.n) if p.delta[v] == delta_min)
    center = tuple(v for v in range(t.n) if p.ecc[v] == r)
    center_set = set(center)
    return DeltaMinLocation(
        delta_min=delta_min,
        argmin=argmin,
        center=center,
        attained_at_center=any(v in center_set for v in argmin),
    )
