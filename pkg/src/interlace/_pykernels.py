"""Pure-Python kernels. Semantics match ``_ckernels`` exactly, including the
order in which the homomorphism search visits vertices and colours."""

from __future__ import annotations

import sys
from typing import Sequence

BACKEND = "python"


class SearchLimit(Exception):
    pass


def adjacency_rows(points: Sequence[Sequence[int]]) -> list[int]:
    """Bitmask rows of the interlacing relation over sorted point tuples."""
    V = len(points)
    rows = [0] * V
    pts = [tuple(p) for p in points]
    for i in range(V):
        a = pts[i]
        k = len(a)
        if k == 0:
            continue
        for j in range(i + 1, V):
            b = pts[j]
            if a[0] < b[0]:
                x, y = a, b
            else:
                x, y = b, a
            ok = True
            for t in range(k - 1):
                if not (x[t] < y[t] < x[t + 1]):
                    ok = False
                    break
            if ok and x[k - 1] < y[k - 1]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _allowed_masks(p: int, q: int) -> list[int]:
    full = (1 << p) - 1
    base = 0
    for d in range(q, p - q + 1):
        base |= 1 << d
    out = []
    for c in range(p):
        out.append(((base << c) | (base >> (p - c))) & full)
    return out


def hom_search(rows: Sequence[int], p: int, q: int, node_limit: int = 0):
    """Backtracking search for a homomorphism into the circular clique K_{p/q}.

    Returns ``(colouring or None, nodes)``. Raises ``SearchLimit`` once more
    than ``node_limit`` nodes are expanded (0 means unlimited).
    """
    V = len(rows)
    if V == 0:
        return [], 0
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    allowed = _allowed_masks(p, q)
    full = (1 << p) - 1
    deg = [r.bit_count() for r in rows]
    colour = [-1] * V
    nodes = 0

    def rec(depth: int, doms: list[int]) -> bool:
        nonlocal nodes
        if depth == V:
            return True
        best, best_size, best_deg = -1, p + 1, -1
        for v in range(V):
            if colour[v] < 0:
                s = doms[v].bit_count()
                if s < best_size or (s == best_size and deg[v] > best_deg):
                    best, best_size, best_deg = v, s, deg[v]
        v = best
        # K_{p/q} is vertex-transitive: the first vertex may be pinned to 0
        cand = doms[v] if depth else 1
        nb_mask = rows[v]
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            nodes += 1
            if node_limit and nodes > node_limit:
                raise SearchLimit(nodes)
            colour[v] = c
            new = list(doms)
            ok = True
            keep = allowed[c]
            m = nb_mask
            while m:
                lb = m & -m
                u = lb.bit_length() - 1
                m ^= lb
                if colour[u] < 0:
                    d = new[u] & keep
                    if not d:
                        ok = False
                        break
                    new[u] = d
            if ok and rec(depth + 1, new):
                return True
            colour[v] = -1
        return False

    limit = sys.getrecursionlimit()
    if limit < V + 100:
        sys.setrecursionlimit(V + 100)
    try:
        found = rec(0, [full] * V)
    finally:
        sys.setrecursionlimit(limit)
    return (list(colour) if found else None), nodes
