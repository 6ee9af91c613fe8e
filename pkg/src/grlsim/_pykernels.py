"""Pure-Python/numpy fallback for the connectivity kernels.

Must stay bit-identical to `_ckernels`: the adjacency predicate is the
squared comparison dx*dx + dy*dy <= range*range evaluated in float64 with
the same operation order, and BFS levels are unique shortest-path lengths,
so both implementations produce exactly the same hop tables.
"""

from __future__ import annotations

from collections import deque

import numpy as np

IMPLEMENTATION = "pure"


def build_adjacency(xs: np.ndarray, ys: np.ndarray, comm_range: float):
    """CSR adjacency (indptr, indices) of the unit-disk graph.

    Edge iff squared distance <= comm_range**2, boundary inclusive,
    no self-edges. Neighbor lists are sorted by node index.
    """
    n = xs.shape[0]
    dx = xs[:, None] - xs[None, :]
    dy = ys[:, None] - ys[None, :]
    d2 = dx * dx + dy * dy
    mask = d2 <= comm_range * comm_range
    np.fill_diagonal(mask, False)
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(mask.sum(axis=1, dtype=np.int32), out=indptr[1:])
    indices = (np.flatnonzero(mask.ravel()) % max(n, 1)).astype(np.int32)
    return indptr, indices


def hop_counts(indptr: np.ndarray, indices: np.ndarray, anchor_ids: np.ndarray, n: int):
    """Minimum hop counts from every node to every anchor via per-anchor BFS.

    Returns an int32 matrix [node][anchor], -1 where unreachable.
    """
    k = len(anchor_ids)
    hops = np.full((n, k), -1, dtype=np.int32)
    for col, a in enumerate(anchor_ids):
        level = hops[:, col]
        level[a] = 0
        queue = deque([int(a)])
        while queue:
            u = queue.popleft()
            d = level[u] + 1
            for v in indices[indptr[u]:indptr[u + 1]]:
                if level[v] < 0:
                    level[v] = d
                    queue.append(int(v))
    return hops
