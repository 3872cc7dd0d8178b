"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times adjacency construction on a few graphs and the homomorphism search
behind the circular chromatic number sweep, once per available backend.
"""

from __future__ import annotations

import argparse
import time

from interlace import _pykernels
from interlace.graph import enumerate_stable_polygons
from interlace.kernels import available_backends
from interlace.oracles import candidate_fractions
from interlace.polygon import Parameters

ADJ_CASES = [(14, 4, 2), (16, 5, 2), (18, 4, 2)]
HOM_CASES = [(7, 2, 2), (9, 3, 2), (10, 2, 3), (11, 3, 3), (10, 4, 2)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def sweep(mod, rows):
    """Walk candidate fractions upward until a homomorphism appears."""
    nodes = 0
    for f in candidate_fractions(len(rows)):
        colouring, explored = mod.hom_search(rows, f.numerator, f.denominator)
        nodes += explored
        if colouring is not None:
            return f, nodes
    return None, nodes


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)}")
    if "cython" not in backends:
        print("compiled extension not built; only the Python timings are shown")

    print(f"\n{'adjacency':<14}{'|V|':>6}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}")
    for t in ADJ_CASES:
        pts = [P.points for P in enumerate_stable_polygons(Parameters(*t))]
        res = {b: best_of(lambda m=backends[b]: m.adjacency_rows(pts), args.repeat) for b in names}
        assert len({tuple(r[1]) for r in res.values()}) == 1, "backends disagree"
        line = f"{str(t):<14}{len(pts):>6}" + "".join(f"{res[b][0]:>11.4f}s" for b in names)
        if "cython" in res:
            line += f"{res['python'][0] / res['cython'][0]:>9.1f}x"
        print(line)

    print(f"\n{'chi_c sweep':<14}{'|V|':>6}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}  value")
    for t in HOM_CASES:
        pts = [P.points for P in enumerate_stable_polygons(Parameters(*t))]
        rows = _pykernels.adjacency_rows(pts)
        res = {b: best_of(lambda m=backends[b]: sweep(m, rows), args.repeat) for b in names}
        values = {r[1][0] for r in res.values()}
        assert len(values) == 1, "backends disagree"
        line = f"{str(t):<14}{len(pts):>6}" + "".join(f"{res[b][0]:>11.4f}s" for b in names)
        if "cython" in res:
            line += f"{res['python'][0] / res['cython'][0]:>9.1f}x"
        print(line + f"  {values.pop()}")


if __name__ == "__main__":
    main()
