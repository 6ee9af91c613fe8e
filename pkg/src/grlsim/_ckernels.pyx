# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled connectivity kernels: unit-disk adjacency and multi-anchor BFS.

Twin of `_pykernels`; both use the same float64 squared-distance predicate
so results are bit-identical (the extension is built with FP contraction
disabled).
"""

import numpy as np

IMPLEMENTATION = "compiled"


def build_adjacency(double[::1] xs, double[::1] ys, double comm_range):
    """CSR adjacency (indptr, indices) of the unit-disk graph."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef double r2 = comm_range * comm_range
    cdef double dx, dy
    cdef Py_ssize_t i, j

    indptr_arr = np.zeros(n + 1, dtype=np.int32)
    cdef int[::1] indptr = indptr_arr
    cdef long long total = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                dx = xs[i] - xs[j]
                dy = ys[i] - ys[j]
                if dx * dx + dy * dy <= r2:
                    total += 1
        indptr[i + 1] = <int> total

    indices_arr = np.empty(total, dtype=np.int32)
    cdef int[::1] indices = indices_arr
    cdef Py_ssize_t pos = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                dx = xs[i] - xs[j]
                dy = ys[i] - ys[j]
                if dx * dx + dy * dy <= r2:
                    indices[pos] = <int> j
                    pos += 1
    return indptr_arr, indices_arr


def hop_counts(int[::1] indptr, int[::1] indices, int[::1] anchor_ids, Py_ssize_t n):
    """Minimum hop counts from every node to every anchor via per-anchor BFS.

    Returns an int32 matrix [node][anchor], -1 where unreachable.
    """
    cdef Py_ssize_t k = anchor_ids.shape[0]
    hops_arr = np.full((n, k), -1, dtype=np.int32)
    cdef int[:, ::1] hops = hops_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t col, head, tail, u, v, e
    cdef int d

    for col in range(k):
        u = anchor_ids[col]
        hops[u, col] = 0
        queue[0] = <int> u
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            d = hops[u, col] + 1
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if hops[v, col] < 0:
                    hops[v, col] = d
                    queue[tail] = <int> v
                    tail += 1
    return hops_arr
