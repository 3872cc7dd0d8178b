"""Exact brute-force certifiers for alpha, chi and chi_c.

Every search is exhaustive and refuses (``CapExceeded``) rather than
approximate.  Witnesses are re-checked with the polygon predicate directly,
so a bug in the bitset machinery cannot certify itself.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

from interlace import kernels
from interlace.clique import CircularCliqueSpec, ReducedFraction
from interlace.graph import InterlacingGraph
from interlace.polygon import interlaces

DEFAULT_CAP = 2000
DEFAULT_MAX_TARGET_ORDER = 256
DEFAULT_NODE_BUDGET = 20_000_000  # search nodes before giving up with CapExceeded


class CapExceeded(RuntimeError):
    pass


class WitnessError(AssertionError):
    pass


@dataclass
class OracleResult:
    value: Any  # int, ReducedFraction, or None when unknown
    witness: Any
    explored: int
    status: str = "ok"  # or "unknown"


def _check_cap(G: InterlacingGraph, cap: int) -> None:
    if len(G) > cap:
        raise CapExceeded(f"{len(G)} vertices exceeds cap {cap}")


def _spend(explored: int, budget: int) -> None:
    if budget and explored > budget:
        raise CapExceeded(f"search exceeded {budget} nodes")


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


# independent re-validation ---------------------------------------------------

def check_independent_set(G: InterlacingGraph, S) -> bool:
    return all(not interlaces(G.vertices[a], G.vertices[b]) for a, b in combinations(S, 2))


def check_proper_coloring(G: InterlacingGraph, col: dict[int, int]) -> bool:
    V = G.vertices
    return all(
        col[a] != col[b]
        for a, b in combinations(range(len(V)), 2)
        if interlaces(V[a], V[b])
    )


def check_homomorphism(G: InterlacingGraph, target: CircularCliqueSpec, mapping) -> bool:
    V = G.vertices
    if len(mapping) != len(V) or any(not 0 <= c < target.order for c in mapping):
        return False
    return all(
        target.adjacent(mapping[a], mapping[b])
        for a, b in combinations(range(len(V)), 2)
        if interlaces(V[a], V[b])
    )


# maximum independent set -----------------------------------------------------

def max_independent_set(
    G: InterlacingGraph, cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_NODE_BUDGET
) -> OracleResult:
    """Exact alpha by memoised include/exclude branching.

    Each subproblem is a vertex bitmask.  Vertices of degree <= 1 are taken
    outright, disconnected subproblems are solved per component, and otherwise
    the search branches on a vertex of maximum degree.
    """
    _check_cap(G, cap)
    V = len(G)
    if V == 0:
        return OracleResult(0, [], 0)
    rows = G.rows
    closed = [rows[v] | (1 << v) for v in range(V)]
    memo: dict[int, int] = {}
    explored = 0

    def component(P: int) -> int:
        low = P & -P
        comp, frontier = low, low
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= rows[v]
            grow &= P & ~comp
            comp |= grow
            frontier = grow
        return comp

    def solve(P: int) -> int:
        """Bitmask of a maximum independent set inside P."""
        nonlocal explored
        if not P:
            return 0
        hit = memo.get(P)
        if hit is not None:
            return hit
        explored += 1
        _spend(explored, node_budget)
        C = component(P)
        if C != P:
            res = solve(C) | solve(P & ~C)
            memo[P] = res
            return res
        pick, pick_deg = -1, -1
        for v in _bits(P):
            d = (rows[v] & P).bit_count()
            if d <= 1:
                res = (1 << v) | solve(P & ~closed[v])
                memo[P] = res
                return res
            if d > pick_deg:
                pick, pick_deg = v, d
        with_v = (1 << pick) | solve(P & ~closed[pick])
        without = solve(P & ~(1 << pick))
        res = with_v if with_v.bit_count() >= without.bit_count() else without
        memo[P] = res
        return res

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * V + 200))
    try:
        best = solve((1 << V) - 1)
    finally:
        sys.setrecursionlimit(limit)
    witness = list(_bits(best))
    if not check_independent_set(G, witness):
        raise WitnessError("independent set witness failed re-validation")
    return OracleResult(len(witness), witness, explored)


# chromatic number ------------------------------------------------------------

def greedy_clique(G: InterlacingGraph) -> list[int]:
    best: list[int] = []
    for start in range(len(G)):
        clique = [start]
        cand = G.rows[start]
        while cand:
            v = max(_bits(cand), key=lambda u: ((G.rows[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= G.rows[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(G: InterlacingGraph) -> dict[int, int]:
    V = len(G)
    col: dict[int, int] = {}
    sat = [set() for _ in range(V)]
    deg = [r.bit_count() for r in G.rows]
    while len(col) < V:
        v = max(
            (u for u in range(V) if u not in col),
            key=lambda u: (len(sat[u]), deg[u], -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        col[v] = c
        for u in _bits(G.rows[v]):
            sat[u].add(c)
    return col


def chromatic_number(
    G: InterlacingGraph, cap: int = DEFAULT_CAP, node_budget: int = DEFAULT_NODE_BUDGET
) -> OracleResult:
    """DSATUR-ordered branch and bound, seeded with a greedy DSATUR colouring
    (upper bound) and a greedy clique (lower bound)."""
    _check_cap(G, cap)
    V = len(G)
    if V == 0:
        return OracleResult(0, {}, 0)
    rows = G.rows
    deg = [r.bit_count() for r in rows]
    best_col = dsatur_greedy(G)
    best = max(best_col.values()) + 1
    lower = len(greedy_clique(G))
    explored = 0
    colour = [-1] * V

    def rec(done: int, used: int) -> bool:
        nonlocal best, best_col, explored
        explored += 1
        _spend(explored, node_budget)
        if done == V:
            best = used
            best_col = {v: colour[v] for v in range(V)}
            return best <= lower
        # max saturation, then degree, then lowest index
        pick, pick_key = -1, None
        for v in range(V):
            if colour[v] < 0:
                s = 0
                for u in _bits(rows[v]):
                    if colour[u] >= 0:
                        s |= 1 << colour[u]
                key = (s.bit_count(), deg[v], -v)
                if pick_key is None or key > pick_key:
                    pick, pick_key, pick_sat = v, key, s
        for c in range(min(used + 1, best - 1)):
            if (pick_sat >> c) & 1:
                continue
            colour[pick] = c
            if rec(done + 1, max(used, c + 1)):
                return True
            colour[pick] = -1
        return False

    if best > lower:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, V + 200))
        try:
            rec(0, 0)
        finally:
            sys.setrecursionlimit(limit)
    if not check_proper_coloring(G, best_col) or len(set(best_col.values())) != best:
        raise WitnessError("colouring witness failed re-validation")
    return OracleResult(best, best_col, explored)


# circular chromatic number ---------------------------------------------------

def has_homomorphism(
    G: InterlacingGraph,
    target: CircularCliqueSpec,
    cap: int = DEFAULT_CAP,
    max_target_order: int = DEFAULT_MAX_TARGET_ORDER,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[bool, list[int] | None, int]:
    """Exhaustive search for G -> K_{p/q}; returns ``(found, map, nodes)``."""
    _check_cap(G, cap)
    if target.order > max_target_order:
        raise CapExceeded(f"target order {target.order} exceeds {max_target_order}")
    try:
        mapping, nodes = kernels.hom_search(list(G.rows), target.order, target.gap, node_budget)
    except kernels.SearchLimit:
        raise CapExceeded(f"K_{target.order}/{target.gap} search exceeded {node_budget} nodes") from None
    if mapping is None:
        return False, None, nodes
    if not check_homomorphism(G, target, mapping):
        raise WitnessError(f"homomorphism witness into K_{target.order}/{target.gap} is invalid")
    return True, mapping, nodes


def candidate_fractions(max_order: int, lower: Fraction = Fraction(2)) -> list[Fraction]:
    """Reduced p/q with p <= max_order and p/q >= lower, ascending."""
    out = set()
    for p in range(1, max_order + 1):
        for q in range(1, p + 1):
            f = Fraction(p, q)
            if f >= lower and f.numerator == p:
                out.add(f)
    return sorted(out)


def circular_chromatic_number(
    G: InterlacingGraph,
    max_order: int | None = None,
    cap: int = DEFAULT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OracleResult:
    """Least p/q with G -> K_{p/q}, testing reduced candidates in increasing order."""
    _check_cap(G, cap)
    V = len(G)
    if max_order is None:
        max_order = V
    if V == 0:
        return OracleResult(ReducedFraction(0, 1), [], 0)
    if G.num_edges() == 0:
        return OracleResult(ReducedFraction(1, 1), [0] * V, 0)
    # any graph with an edge needs p/q >= 2, and at least its clique number
    lower = Fraction(max(2, len(greedy_clique(G))))
    explored = 0
    for f in candidate_fractions(max_order, lower):
        spec = CircularCliqueSpec(f.numerator, f.denominator)
        # the budget is shared by the whole sweep
        left = node_budget - explored if node_budget else 0
        if node_budget and left <= 0:
            raise CapExceeded(f"sweep exceeded {node_budget} nodes")
        found, mapping, nodes = has_homomorphism(
            G, spec, cap=cap, max_target_order=max(max_order, 1), node_budget=left
        )
        explored += nodes
        if found:
            return OracleResult(ReducedFraction(f.numerator, f.denominator), mapping, explored)
    return OracleResult(None, None, explored, status="unknown")
