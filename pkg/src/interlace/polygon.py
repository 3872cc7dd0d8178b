"""Polygons on a labelled circle ``1..n``.

A polygon is a sorted k-subset of ``{1, ..., n}``; its shape is the tuple of
clockwise gaps between consecutive points, read from the smallest point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True)
class Parameters:
    """The ambient triple ``(n, k, r)``; requires ``r >= 2`` and ``n >= r*k``."""

    n: int
    k: int
    r: int = 2

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise InvalidParameters(f"n and k must be positive, got n={self.n}, k={self.k}")
        if self.r < 2:
            raise InvalidParameters(f"r must be at least 2, got r={self.r}")
        if self.n < self.r * self.k:
            raise InvalidParameters(
                f"need n >= r*k, got n={self.n} < {self.r}*{self.k}"
            )

    def astuple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.r)


@dataclass(frozen=True, order=True)
class Polygon:
    points: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        pts = self.points
        if not isinstance(pts, tuple):
            object.__setattr__(self, "points", pts := tuple(pts))
        for a, b in zip(pts, pts[1:]):
            if a >= b:
                raise ValueError(f"points must be strictly increasing: {pts}")
        if pts and (pts[0] < 1 or pts[-1] > self.n):
            raise ValueError(f"points {pts} outside [1, {self.n}]")

    @classmethod
    def of(cls, points: Iterable[int], n: int) -> "Polygon":
        """Build from an unordered collection of labels in ``1..n``."""
        return cls(tuple(sorted(set(points))), n)

    @property
    def k(self) -> int:
        return len(self.points)

    def __contains__(self, x: int) -> bool:
        return x in self.points

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def label(self) -> str:
        return "-".join(map(str, self.points))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.points)) + "}"


def shape(P: Polygon) -> tuple[int, ...]:
    pts = P.points
    if not pts:
        return ()
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(pts[0] + P.n - pts[-1])
    return tuple(gaps)


def is_r_stable(P: Polygon, r: int) -> bool:
    gaps = shape(P)
    return not gaps or min(gaps) >= r


def rotate(P: Polygon, i: int) -> Polygon:
    """Rotate clockwise ``i`` steps; labels stay in ``1..n`` (never 0)."""
    n = P.n
    return Polygon(tuple(sorted((p - 1 + i) % n + 1 for p in P.points)), n)


def interlaces(P: Polygon, Q: Polygon) -> bool:
    """True iff P and Q are disjoint and strictly alternate around the circle."""
    k = len(P.points)
    if k != len(Q.points) or k == 0:
        return False
    p, q = P.points, Q.points
    if p[0] < q[0]:
        first, second = p, q
    else:
        first, second = q, p
    for i in range(k):
        if not first[i] < second[i]:
            return False
        if i + 1 < k and not second[i] < first[i + 1]:
            return False
    return True


def from_shape(gaps: Sequence[int], anchor: int, n: int | None = None) -> Polygon:
    """Polygon with a point at ``anchor`` and clockwise gaps ``gaps`` from there."""
    total = sum(gaps)
    if n is None:
        n = total
    if total != n:
        raise ValueError(f"gaps {tuple(gaps)} sum to {total}, not {n}")
    if any(g < 1 for g in gaps):
        raise ValueError(f"gaps must be positive: {tuple(gaps)}")
    if not 1 <= anchor <= n:
        raise ValueError(f"anchor {anchor} outside [1, {n}]")
    pts = []
    x = anchor - 1
    for g in gaps:
        pts.append(x % n + 1)
        x += g
    return Polygon.of(pts, n)
