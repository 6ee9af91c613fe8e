"""Unit-disk connectivity, range scaling, and hop-count tables.

The communication graph has an undirected edge between two nodes iff their
Euclidean distance is at most the communication range (boundary inclusive).
Hop counts are unweighted shortest-path lengths from every anchor, computed
by one BFS per anchor through the selected kernel implementation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .deployment import Deployment
from .geometry import PHI

#: Sentinel hop count for node/anchor pairs with no connecting path.
UNREACHABLE: int = -1


def scaled_range(r: float) -> float:
    """Communication range from sensing radius: R = phi * r."""
    if not r > 0:
        raise ValueError(f"range must be positive, got {r}")
    return PHI * r


@dataclass(frozen=True)
class Topology:
    """A deployment plus the per-algorithm communication ranges."""

    deployment: Deployment
    comm_ranges: dict[str, float]

    def __post_init__(self) -> None:
        for alg, r in self.comm_ranges.items():
            if not r > 0:
                raise ValueError(f"communication range for {alg!r} must be positive, got {r}")


class Graph:
    """Immutable CSR adjacency over node ids 0..n-1 (anchors first)."""

    __slots__ = ("n", "indptr", "indices")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = n
        self.indptr = indptr
        self.indices = indices

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.indptr[u + 1] - self.indptr[u])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < len(row) and int(row[i]) == v

    @property
    def n_edges(self) -> int:
        return int(len(self.indices)) // 2

    @classmethod
    def from_positions(cls, xs: np.ndarray, ys: np.ndarray, comm_range: float) -> "Graph":
        xs = np.ascontiguousarray(xs, dtype=np.float64)
        ys = np.ascontiguousarray(ys, dtype=np.float64)
        indptr, indices = kernels.active.build_adjacency(xs, ys, comm_range)
        return cls(len(xs), indptr, indices)


def build_graph(deployment: Deployment, comm_range: float) -> Graph:
    """Unit-disk graph over all nodes of the deployment."""
    if not comm_range > 0:
        raise ValueError(f"comm_range must be positive, got {comm_range}")
    pts = list(deployment.anchors) + list(deployment.unknowns)
    xs = np.array([p.x for p in pts], dtype=np.float64)
    ys = np.array([p.y for p in pts], dtype=np.float64)
    return Graph.from_positions(xs, ys, comm_range)


class HopTable:
    """Minimum hop counts, hops[node][anchor_column]; UNREACHABLE = no path.

    Anchor columns follow the order of `anchor_ids`, which for experiment
    graphs is simply 0..k-1 (anchors occupy the low node ids).
    """

    __slots__ = ("hops", "anchor_ids")

    def __init__(self, hops: np.ndarray, anchor_ids: np.ndarray):
        self.hops = hops
        self.anchor_ids = anchor_ids

    @property
    def n_nodes(self) -> int:
        return self.hops.shape[0]

    @property
    def n_anchors(self) -> int:
        return self.hops.shape[1]

    def hop(self, node: int, anchor_column: int) -> int:
        return int(self.hops[node, anchor_column])

    def is_reachable(self, node: int, anchor_column: int) -> bool:
        return self.hops[node, anchor_column] != UNREACHABLE

    def reachable_columns(self, node: int) -> np.ndarray:
        """Anchor columns reachable from `node`, ascending."""
        return np.flatnonzero(self.hops[node] != UNREACHABLE)


def compute_hops(graph: Graph, anchor_ids) -> HopTable:
    """BFS shortest hop counts from each anchor to every node."""
    ids = np.ascontiguousarray(anchor_ids, dtype=np.int32)
    if len(ids) == 0:
        raise ValueError("anchor_ids must be non-empty")
    if ids.min() < 0 or ids.max() >= graph.n:
        raise ValueError("anchor id out of range")
    hops = kernels.active.hop_counts(graph.indptr, graph.indices, ids, graph.n)
    return HopTable(hops, ids)
