"""The explicit circular n/k-colouring of the interlacing graph.

Every 2-stable polygon has a rotation that puts one of its points at ``n``
while keeping every prefix arc ``{1, ..., ceil(m*n/k) - 1}`` below ``m``
points.  The set of such rotated polygons is called ``L`` here; a polygon is
coloured ``i*k mod n`` for the least ``i`` with ``rho_{-i}(P)`` in ``L``.
All threshold comparisons are exact integer cross-multiplications.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from interlace.graph import InterlacingGraph, enumerate_stable_polygons
from interlace.polygon import Parameters, Polygon, is_r_stable, rotate, shape


class ColoringError(RuntimeError):
    pass


@dataclass(frozen=True)
class CircularColoring:
    modulus: int
    gap: int
    colors: Mapping[int, int]  # vertex index -> residue mod modulus

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class CanonicalForm:
    rotation_index: int
    rotated: Polygon
    pivot: int  # 1-based index j0 of the point moved to n


def _pivot_ok(y: Sequence[int], j0: int, z: int) -> bool:
    k = len(y)
    acc = 0
    for m in range(1, k + 1):
        acc += y[(j0 - 1 + m - 1) % k]
        if k * acc < m * z:
            return False
    return True


def valid_pivots(y: Sequence[int]) -> list[int]:
    """Every 1-based ``j0`` whose cyclic partial sums meet the proportional bound."""
    if not y:
        raise ValueError("empty vector")
    z = sum(y)
    return [j for j in range(1, len(y) + 1) if _pivot_ok(y, j, z)]


def find_pivot(y: Sequence[int]) -> int:
    """Smallest ``j0`` with ``k * sum(y[j0 .. j0+m-1]) >= m * sum(y)`` for all m (cyclic)."""
    if not y:
        raise ValueError("empty vector")
    if any(v < 0 for v in y):
        raise ValueError(f"entries must be nonnegative: {tuple(y)}")
    z = sum(y)
    for j in range(1, len(y) + 1):
        if _pivot_ok(y, j, z):
            return j
    raise AssertionError(f"no pivot for {tuple(y)}")  # impossible for y >= 0


def pivot_is_strict(y: Sequence[int], j0: int) -> bool:
    """Whether some partial sum from ``j0`` strictly exceeds its bound."""
    k, z = len(y), sum(y)
    acc = 0
    for m in range(1, k + 1):
        acc += y[(j0 - 1 + m - 1) % k]
        if k * acc > m * z:
            return True
    return False


def is_in_L(P: Polygon) -> bool:
    n, k = P.n, P.k
    if k == 0 or n not in P or not is_r_stable(P, 2):
        return False
    # the m-th point after n must sit at or beyond m*n/k
    for m, q in enumerate(P.points[:-1], start=1):
        if k * q < m * n:
            return False
    return True


def canonical_rotation(P: Polygon) -> CanonicalForm:
    """Rotate a pivot point of ``P`` onto ``n`` so the result lies in ``L``.

    Among admissible pivots the one needing the smallest rotation is used, so
    polygons already in ``L`` come back unrotated.
    """
    if not is_r_stable(P, 2):
        raise ValueError(f"{P} is not 2-stable")
    n = P.n
    d = shape(P)
    pivots = valid_pivots(d)
    # gaps d_j run from y_j to y_{j+1}; a pivot j sends y_j to n
    j0 = max(pivots, key=lambda j: P.points[j - 1])
    i = n - P.points[j0 - 1]
    Q = rotate(P, i)
    if not is_in_L(Q):
        raise ColoringError(f"rotation {i} of {P} is not in L")
    return CanonicalForm(i, Q, j0)


def color_index(P: Polygon) -> int:
    """Least ``i`` in ``[0, n)`` with ``P`` a clockwise ``i``-rotation of a member of L."""
    n = P.n
    for i in range(n):
        if is_in_L(rotate(P, (n - i) % n)):
            return i
    raise ColoringError(f"{P} has no rotation into L")


def color(G: InterlacingGraph) -> CircularColoring:
    n, k = G.params.n, G.params.k
    colors = {v: (color_index(P) * k) % n for v, P in enumerate(G.vertices)}
    return CircularColoring(n, k, colors)


def edge_ok(a: int, b: int, n: int, k: int) -> bool:
    return k <= (a - b) % n <= n - k


def validate_circular(G: InterlacingGraph, coloring: CircularColoring) -> tuple[bool, list[tuple[int, int]]]:
    missing = [v for v in range(len(G)) if v not in coloring.colors]
    if missing:
        raise KeyError(f"coloring misses vertices {missing[:10]}")
    n, k = coloring.modulus, coloring.gap
    bad = [
        (u, v)
        for u, v in G.edges()
        if not edge_ok(coloring.colors[u], coloring.colors[v], n, k)
    ]
    return not bad, bad


def derive_proper_coloring(coloring: CircularColoring, G: InterlacingGraph | None = None) -> dict[int, int]:
    """Collapse residues into ``ceil(n/k)`` ordinary colour classes.

    When ``G`` is given the input is validated first.
    """
    n, k = coloring.modulus, coloring.gap
    if G is not None:
        ok, bad = validate_circular(G, coloring)
        if not ok:
            raise ColoringError(f"invalid circular coloring, {len(bad)} bad edges")
    return {v: (c % n) // k for v, c in coloring.colors.items()}


def l_family(n: int, k: int) -> list[Polygon]:
    """All members of ``L`` for the 2-stable k-polygons on ``[n]``."""
    return [P for P in enumerate_stable_polygons(Parameters(n, k, 2)) if is_in_L(P)]
