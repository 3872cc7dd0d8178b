"""Vertex enumeration and assembly of the interlacing graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from interlace import kernels
from interlace.polygon import Parameters, Polygon, interlaces


def compositions(total: int, parts: int, minimum: int = 1) -> Iterator[tuple[int, ...]]:
    """All ``parts``-tuples of integers ``>= minimum`` summing to ``total``, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def enumerate_stable_polygons(params: Parameters) -> list[Polygon]:
    n, k, r = params.n, params.k, params.r
    # A polygon is fixed by its shape read from p_1 and by p_1 itself, which
    # ranges over positions keeping p_k = p_1 + (n - closing gap) <= n.
    out = []
    for gaps in compositions(n, k, r):
        span = n - gaps[-1]
        for p1 in range(1, n - span + 1):
            pts = [p1]
            for g in gaps[:-1]:
                pts.append(pts[-1] + g)
            out.append(Polygon(tuple(pts), n))
    out.sort()
    return out


def per_point_count(params: Parameters) -> int:
    n, k, r = params.n, params.k, params.r
    return comb(n - (r - 1) * k - 1, k - 1)


def vertex_count_formula(params: Parameters) -> int:
    num = params.n * per_point_count(params)
    if num % params.k:
        raise ArithmeticError(f"vertex count not integral for {params}")
    return num // params.k


@dataclass(frozen=True)
class InterlacingGraph:
    params: Parameters
    vertices: tuple[Polygon, ...]
    rows: tuple[int, ...]  # bitmask adjacency, bit j of rows[i] <=> i ~ j
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {P: i for i, P in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbours(self, i: int) -> list[int]:
        out = []
        m = self.rows[i]
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.vertices)) for j in self.neighbours(i) if i < j]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, idx) -> "InterlacingGraph":
        """Subgraph on the given vertex indices, reindexed in canonical order."""
        idx = sorted(idx, key=lambda i: self.vertices[i])
        pos = {old: new for new, old in enumerate(idx)}
        rows = []
        for old in idx:
            m = 0
            for j in self.neighbours(old):
                if j in pos:
                    m |= 1 << pos[j]
            rows.append(m)
        return InterlacingGraph(self.params, tuple(self.vertices[i] for i in idx), tuple(rows))


def build_graph(params: Parameters) -> InterlacingGraph:
    verts = enumerate_stable_polygons(params)
    rows = kernels.adjacency_rows([P.points for P in verts])
    G = InterlacingGraph(params, tuple(verts), tuple(rows))
    expected = vertex_count_formula(params)
    if len(G) != expected:
        raise AssertionError(f"enumerated {len(G)} vertices, formula gives {expected}")
    return G


def graph_from_edges(params: Parameters, vertices, edges) -> InterlacingGraph:
    """Assemble a graph from an explicit edge list (used when importing)."""
    rows = [0] * len(vertices)
    for i, j in edges:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return InterlacingGraph(params, tuple(vertices), tuple(rows))


def brute_force_rows(vertices) -> list[int]:
    """Adjacency straight from the polygon predicate, without the kernels."""
    rows = [0] * len(vertices)
    for i, P in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if interlaces(P, vertices[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows
