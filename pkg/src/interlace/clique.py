"""Equidistant polygons and the circular clique they span."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from interlace.graph import InterlacingGraph
from interlace.polygon import Parameters, Polygon


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class ReducedFraction:
    num: int
    den: int

    @classmethod
    def of(cls, num: int, den: int) -> "ReducedFraction":
        g = gcd(num, den)
        return cls(num // g, den // g)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class CircularCliqueSpec:
    """K_{order/gap}: residues mod ``order``, adjacent at cyclic distance >= ``gap``."""

    order: int
    gap: int

    def adjacent(self, a: int, b: int) -> bool:
        return self.gap <= (a - b) % self.order <= self.order - self.gap


def equidistant_polygon(params: Parameters, j: int) -> Polygon:
    n, k = params.n, params.k
    pts = [(j + n - 1) % n + 1]
    pts += [(j + ceil_div(i * n, k) - 1) % n + 1 for i in range(1, k)]
    return Polygon.of(pts, n)


def reduced(params: Parameters) -> ReducedFraction:
    return ReducedFraction.of(params.n, params.k)


def equidistant_family(params: Parameters) -> list[Polygon]:
    """The ``n' = n / gcd(n, k)`` distinct polygons ``P^0 .. P^{n'-1}``."""
    return [equidistant_polygon(params, j) for j in range(reduced(params).num)]


def clique_homomorphism_labels(params: Parameters) -> dict[Polygon, int]:
    f = reduced(params)
    return {P: (j * f.den) % f.num for j, P in enumerate(equidistant_family(params))}


@dataclass
class CliqueReport:
    fraction: ReducedFraction
    size: int
    missing_vertices: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)  # (P, Q, adjacent_in_G, adjacent_in_K)

    @property
    def ok(self) -> bool:
        return not self.missing_vertices and not self.mismatches and self.size == self.fraction.num


def verify_circular_clique(G: InterlacingGraph) -> tuple[bool, CliqueReport]:
    """Check edge-for-edge that the equidistant family induces K_{n'/k'} in ``G``."""
    params = G.params
    f = reduced(params)
    target = CircularCliqueSpec(f.num, f.den)
    labels = clique_homomorphism_labels(params)
    family = list(labels)
    report = CliqueReport(f, len(set(family)))
    idx = []
    for P in family:
        if P not in G.index:
            report.missing_vertices.append(P)
        else:
            idx.append(G.index[P])
    if sorted(labels.values()) != list(range(f.num)):
        report.mismatches.append(("labels", sorted(labels.values())))
    if report.missing_vertices:
        return False, report
    for a in range(len(family)):
        for b in range(a + 1, len(family)):
            P, Q = family[a], family[b]
            in_g = G.adjacent(idx[a], idx[b])
            in_k = target.adjacent(labels[P], labels[Q])
            if in_g != in_k:
                report.mismatches.append((P, Q, in_g, in_k))
    return report.ok, report
