"""Graph export (DIMACS, DOT, JSON) and JSON import.

Vertex numbering is always the canonical lexicographic order of the point
lists: 1-based in DIMACS and DOT, 0-based array indices in JSON.
"""

from __future__ import annotations

import json
from typing import Any

from interlace.graph import InterlacingGraph, graph_from_edges
from interlace.polygon import Parameters, Polygon

FORMATS = ("dimacs", "dot", "json")


def to_dimacs(G: InterlacingGraph) -> str:
    n, k, r = G.params.astuple()
    edges = G.edges()
    lines = [f"c interlacing graph n={n} k={k} r={r}"]
    lines += [f"c v {i + 1} {P.label()}" for i, P in enumerate(G.vertices)]
    lines.append(f"p edge {len(G)} {len(edges)}")
    lines += [f"e {i + 1} {j + 1}" for i, j in edges]
    return "\n".join(lines) + "\n"


def to_dot(G: InterlacingGraph) -> str:
    n, k, r = G.params.astuple()
    lines = [f"graph IG_{n}_{k}_{r} {{"]
    lines += [f'  v{i + 1} [label="{P.label()}"];' for i, P in enumerate(G.vertices)]
    lines += [f"  v{i + 1} -- v{j + 1};" for i, j in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(G: InterlacingGraph) -> dict[str, Any]:
    n, k, r = G.params.astuple()
    return {
        "n": n,
        "k": k,
        "r": r,
        "vertices": [list(P.points) for P in G.vertices],
        "edges": [[i, j] for i, j in G.edges()],
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def to_json(G: InterlacingGraph) -> str:
    return dumps(to_json_obj(G))


def export(G: InterlacingGraph, fmt: str) -> str:
    if fmt == "dimacs":
        return to_dimacs(G)
    if fmt == "dot":
        return to_dot(G)
    if fmt == "json":
        return to_json(G)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def from_json(text: str) -> InterlacingGraph:
    obj = json.loads(text)
    params = Parameters(obj["n"], obj["k"], obj["r"])
    verts = [Polygon(tuple(v), params.n) for v in obj["vertices"]]
    if verts != sorted(verts) or len(set(verts)) != len(verts):
        raise ValueError("vertices are not in canonical order")
    return graph_from_edges(params, verts, [tuple(e) for e in obj["edges"]])


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Return ``(V, edges)`` with 0-based indices; checks the header count."""
    V = E = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            V, E = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            u, v = int(parts[1]), int(parts[2])
            if V is None or not (1 <= u <= V and 1 <= v <= V):
                raise ValueError(f"bad edge line {line!r}")
            edges.append((u - 1, v - 1))
    if V is None:
        raise ValueError("missing 'p edge' header")
    if E != len(edges):
        raise ValueError(f"header says {E} edges, found {len(edges)}")
    return V, edges
