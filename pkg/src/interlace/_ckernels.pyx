# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in twin of ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t
from libc.stdlib cimport malloc, free

from interlace._pykernels import SearchLimit, hom_search as _py_hom_search

cnp.import_array()

BACKEND = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def _pack_rows(cnp.uint8_t[:, ::1] mat):
    packed = np.packbits(np.asarray(mat), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def adjacency_rows(points):
    cdef Py_ssize_t V = len(points)
    if V == 0:
        return []
    arr = np.ascontiguousarray(np.asarray(points, dtype=np.int32).reshape(V, -1))
    cdef int32_t[:, ::1] pts = arr
    cdef Py_ssize_t k = pts.shape[1]
    mat = np.zeros((V, V), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] m = mat
    cdef Py_ssize_t i, j, t
    cdef int32_t *x
    cdef int32_t *y
    cdef bint ok
    if k == 0:
        return [0] * V
    with nogil:
        for i in range(V):
            for j in range(i + 1, V):
                if pts[i, 0] < pts[j, 0]:
                    x = &pts[i, 0]
                    y = &pts[j, 0]
                else:
                    x = &pts[j, 0]
                    y = &pts[i, 0]
                ok = True
                for t in range(k - 1):
                    if not (x[t] < y[t] and y[t] < x[t + 1]):
                        ok = False
                        break
                if ok and x[k - 1] < y[k - 1]:
                    m[i, j] = 1
                    m[j, i] = 1
    return _pack_rows(m)


cdef struct Search:
    Py_ssize_t V
    int p
    uint64_t *allowed      # p masks
    int *nbr               # concatenated neighbour lists
    int *nbr_start         # V + 1 offsets
    int *deg
    int *colour
    uint64_t *doms         # (V + 1) * V domain stack
    long long nodes
    long long node_limit
    bint hit_limit


cdef bint _rec(Search *s, Py_ssize_t depth) nogil:
    cdef Py_ssize_t V = s.V
    if depth == V:
        return True
    cdef uint64_t *doms = s.doms + depth * V
    cdef uint64_t *new = s.doms + (depth + 1) * V
    cdef Py_ssize_t v, best = -1, u, t
    cdef int sz, best_size = s.p + 1, best_deg = -1
    for v in range(V):
        if s.colour[v] < 0:
            sz = __builtin_popcountll(doms[v])
            if sz < best_size or (sz == best_size and s.deg[v] > best_deg):
                best = v
                best_size = sz
                best_deg = s.deg[v]
    v = best
    cdef uint64_t cand = doms[v] if depth else 1
    cdef uint64_t keep, d
    cdef int c
    cdef bint ok
    while cand:
        c = __builtin_ctzll(cand)
        cand &= cand - 1
        s.nodes += 1
        if s.node_limit and s.nodes > s.node_limit:
            s.hit_limit = True
            return False
        s.colour[v] = c
        for t in range(V):
            new[t] = doms[t]
        ok = True
        keep = s.allowed[c]
        for t in range(s.nbr_start[v], s.nbr_start[v + 1]):
            u = s.nbr[t]
            if s.colour[u] < 0:
                d = new[u] & keep
                if not d:
                    ok = False
                    break
                new[u] = d
        if ok and _rec(s, depth + 1):
            return True
        if s.hit_limit:
            return False
        s.colour[v] = -1
    return False


def hom_search(rows, int p, int q, long long node_limit=0):
    """See ``_pykernels.hom_search``. Targets with more than 64 colours fall
    back to the Python implementation."""
    cdef Py_ssize_t V = len(rows)
    if V == 0:
        return [], 0
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if p > 64:
        return _py_hom_search(rows, p, q, node_limit)

    cdef Search s
    cdef Py_ssize_t i, c, total = 0
    cdef uint64_t full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if p == 64 else ((<uint64_t>1 << p) - 1)
    cdef uint64_t base = 0
    nbrs = []
    for i in range(V):
        row = rows[i]
        lst = []
        while row:
            low = row & -row
            lst.append(low.bit_length() - 1)
            row ^= low
        nbrs.append(lst)
        total += len(lst)

    s.V = V
    s.p = p
    s.nodes = 0
    s.node_limit = node_limit
    s.hit_limit = False
    s.allowed = <uint64_t *> malloc(p * sizeof(uint64_t))
    s.nbr = <int *> malloc((total + 1) * sizeof(int))
    s.nbr_start = <int *> malloc((V + 1) * sizeof(int))
    s.deg = <int *> malloc(V * sizeof(int))
    s.colour = <int *> malloc(V * sizeof(int))
    s.doms = <uint64_t *> malloc((V + 1) * V * sizeof(uint64_t))
    if (s.allowed == NULL or s.nbr == NULL or s.nbr_start == NULL or s.deg == NULL
            or s.colour == NULL or s.doms == NULL):
        free(s.allowed); free(s.nbr); free(s.nbr_start)
        free(s.deg); free(s.colour); free(s.doms)
        raise MemoryError()
    cdef bint found
    try:
        for c in range(q, p - q + 1):
            base |= (<uint64_t>1) << c
        for c in range(p):
            if c == 0:
                s.allowed[c] = base & full
            else:
                s.allowed[c] = ((base << c) | (base >> (p - c))) & full
        t = 0
        for i in range(V):
            s.nbr_start[i] = t
            s.deg[i] = len(nbrs[i])
            s.colour[i] = -1
            s.doms[i] = full
            for u in nbrs[i]:
                s.nbr[t] = u
                t += 1
        s.nbr_start[V] = t
        with nogil:
            found = _rec(&s, 0)
        if s.hit_limit:
            raise SearchLimit(s.nodes)
        colouring = [s.colour[i] for i in range(V)] if found else None
        return colouring, s.nodes
    finally:
        free(s.allowed); free(s.nbr); free(s.nbr_start)
        free(s.deg); free(s.colour); free(s.doms)
