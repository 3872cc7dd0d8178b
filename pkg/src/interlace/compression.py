"""Counterclockwise compression of independent sets.

``f`` fixes point 1 and moves every other point one step counterclockwise.
An independent set splits into families according to how its members meet
point 1, and each family shrinks to an instance on a smaller circle under a
suitable power of ``f``.  ``verify_claims`` checks the six properties that
make the induction on ``n`` and ``k`` go through.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from interlace.polygon import Parameters, Polygon, interlaces, is_r_stable


class NotIndependent(ValueError):
    def __init__(self, P: Polygon, Q: Polygon):
        super().__init__(f"{P} and {Q} interlace")
        self.pair = (P, Q)


def f_shift(P: Polygon, ambient: int | None = None) -> Polygon:
    """Image of ``P`` under f; may lose a point when both 1 and 2 are in ``P``.

    The result keeps P's circle size unless ``ambient`` is given (e.g. ``n-1``
    when the caller knows ``n`` is not in the image).
    """
    n = P.n if ambient is None else ambient
    return Polygon.of((1 if p == 1 else p - 1 for p in P.points), n)


def f_power(P: Polygon, t: int, ambient: int | None = None) -> Polygon:
    Q = P
    for _ in range(t):
        Q = f_shift(Q)
    if ambient is not None:
        Q = Polygon(Q.points, ambient)
    return Q


@dataclass
class IndependentSetPartition:
    interior: set = field(default_factory=set)       # 1 in P and f(P) = f(Q) for another Q
    corner: set = field(default_factory=set)         # 1 and r+1 in P
    straddle: dict = field(default_factory=dict)     # i -> {P : r-i+1 in P and n-i+1 in P}
    remainder: set = field(default_factory=set)

    def parts(self) -> dict[str, set]:
        out = {"int": self.interior, "c": self.corner}
        for i in sorted(self.straddle):
            out[str(i)] = self.straddle[i]
        out["rem"] = self.remainder
        return out

    def compressed(self) -> set:
        """Union of every family except the remainder."""
        s = set(self.interior) | self.corner
        for fam in self.straddle.values():
            s |= fam
        return s


def check_independent(family: Iterable[Polygon]) -> None:
    for P, Q in combinations(sorted(family), 2):
        if interlaces(P, Q):
            raise NotIndependent(P, Q)


def partition_independent_set(I: Iterable[Polygon], params: Parameters) -> IndependentSetPartition:
    I = set(I)
    check_independent(I)
    n, r = params.n, params.r
    images: dict[Polygon, list[Polygon]] = {}
    for P in I:
        images.setdefault(f_shift(P), []).append(P)
    part = IndependentSetPartition(straddle={i: set() for i in range(1, r)})
    for P in sorted(I):
        homes = []
        if 1 in P and len(images[f_shift(P)]) > 1:
            homes.append(part.interior)
        if 1 in P and r + 1 in P:
            homes.append(part.corner)
        for i in range(1, r):
            if r - i + 1 in P and n - i + 1 in P:
                homes.append(part.straddle[i])
        if len(homes) > 1:
            raise AssertionError(f"{P} falls into {len(homes)} families")
        (homes[0] if homes else part.remainder).add(P)
    return part


@dataclass(frozen=True)
class ClaimReport:
    claim_id: int
    holds: bool
    counterexample: object = None


def _first_interlacing(family: Iterable[Polygon]):
    for P, Q in combinations(sorted(family), 2):
        if interlaces(P, Q):
            return (P, Q)
    return None


def verify_claims(I: Iterable[Polygon], params: Parameters) -> list[ClaimReport]:
    """Evaluate all six compression claims for the independent set ``I``."""
    part = partition_independent_set(I, params)
    n, k, r = params.n, params.k, params.r
    out = []

    rem = sorted(part.remainder)
    rem_img = {P: f_shift(P, n - 1) if n - 1 >= 1 else f_shift(P) for P in rem}
    # 1: f is injective on the remainder
    seen: dict[Polygon, Polygon] = {}
    clash = None
    for P, img in rem_img.items():
        if img in seen:
            clash = (seen[img], P)
            break
        seen[img] = P
    out.append(ClaimReport(1, clash is None, clash))

    # 2: images are r-stable k-polygons on [n-1]
    bad = next(
        (P for P, img in rem_img.items()
         if img.k != k or (img.points and img.points[-1] > n - 1) or not is_r_stable(img, r)),
        None,
    )
    out.append(ClaimReport(2, bad is None, bad))

    # 3: images pairwise non-interlacing
    pair = _first_interlacing(set(rem_img.values()))
    out.append(ClaimReport(3, pair is None, pair))

    comp = sorted(part.compressed())
    comp_img = {P: f_power(P, r - 1) for P in comp}
    # 4: f^{r-1} injective on the other families
    seen = {}
    clash = None
    for P, img in comp_img.items():
        if img in seen:
            clash = (seen[img], P)
            break
        seen[img] = P
    out.append(ClaimReport(4, clash is None, clash))

    # 5: each image contains 1; dropping it leaves an r-stable (k-1)-polygon on [2, n-r+1]
    m = n - r
    reduced = {}
    bad = None
    for P, img in comp_img.items():
        rest = [p for p in img.points if p != 1]
        if 1 not in img or img.k != k or any(not 2 <= p <= n - r + 1 for p in rest):
            bad = P
            break
        Q = Polygon(tuple(p - 1 for p in rest), m)
        if not is_r_stable(Q, r):
            bad = P
            break
        reduced[P] = Q
    out.append(ClaimReport(5, bad is None, bad))

    # 6: the (k-1)-polygons are pairwise non-interlacing
    pair = None
    for (P, A), (Q, B) in combinations(reduced.items(), 2):
        if A.k and interlaces(A, B):
            pair = (P, Q)
            break
    out.append(ClaimReport(6, pair is None, pair))
    return out


def independence_formula(params: Parameters) -> int:
    n, k, r = params.n, params.k, params.r
    return comb(n - (r - 1) * k - 1, k - 1)


def star(vertices: Iterable[Polygon], point: int) -> list[Polygon]:
    """All given polygons through ``point``; an independent set of the graph."""
    return [P for P in vertices if point in P]


def random_independent_sets(vertices, count: int, seed: int) -> list[set]:
    """Independent sets grown greedily in random order to a random target size."""
    rng = random.Random(seed)
    verts = list(vertices)
    out = []
    for _ in range(count):
        order = verts[:]
        rng.shuffle(order)
        target = rng.randint(1, len(order)) if order else 0
        chosen: list[Polygon] = []
        for P in order:
            if len(chosen) >= target:
                break
            if all(not interlaces(P, Q) for Q in chosen):
                chosen.append(P)
        out.append(set(chosen))
    return out
