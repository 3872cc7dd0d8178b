"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 on a mathematical
failure, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from interlace import kernels
from interlace.certify import FAIL, certify
from interlace.coloring import ColoringError, color, derive_proper_coloring, validate_circular
from interlace.formats import FORMATS, dumps, export
from interlace.graph import build_graph
from interlace.oracles import DEFAULT_CAP, DEFAULT_NODE_BUDGET
from interlace.polygon import InvalidParameters, Parameters

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("interlace")


def _params_args(p: argparse.ArgumentParser, r_default: int | None = None) -> None:
    p.add_argument("-n", type=int, required=True, help="number of points on the circle")
    p.add_argument("-k", type=int, required=True, help="points per polygon")
    if r_default is None:
        p.add_argument("-r", type=int, required=True, help="stability radius (>= 2)")
    else:
        p.add_argument("-r", type=int, default=r_default, help=f"stability radius (default {r_default})")
    p.add_argument("-o", "--output", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interlace", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="export the interlacing graph")
    _params_args(b)
    b.add_argument("--format", choices=FORMATS, default="json")

    c = sub.add_parser("color", parents=[common], help="emit and validate the circular n/k-colouring")
    _params_args(c, r_default=2)

    cert = sub.add_parser("certify", parents=[common], help="check the closed forms against exact oracles")
    _params_args(cert)
    cert.add_argument("--all", action="store_true", help="run every check below")
    cert.add_argument("--alpha-exact", action="store_true")
    cert.add_argument("--chi-exact", action="store_true")
    cert.add_argument("--circular-exact", action="store_true")
    cert.add_argument("--max-order", type=int, default=None, help="largest p tried for K_{p/q}")
    cert.add_argument("--claims", action="store_true", help="verify the compression claims")
    cert.add_argument("--seed", type=int, default=0, help="seed for random independent sets")
    cert.add_argument("--samples", type=int, default=100)
    cert.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex cap for exact searches")
    cert.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                      help="search nodes per oracle before reporting SKIPPED(cap); 0 = unlimited")
    cert.add_argument("--witness-dir", metavar="DIR", help="write oracle witnesses as JSON files")
    cert.add_argument("--timing", action="store_true", help="include wall time in the report")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    G = build_graph(Parameters(args.n, args.k, args.r))
    _emit(export(G, args.format), args.output)
    return EXIT_OK


def cmd_color(args) -> int:
    params = Parameters(args.n, args.k, args.r)
    G = build_graph(params)
    try:
        col = color(G)
    except ColoringError as exc:
        log.error("%s", exc)
        return EXIT_FAIL
    ok, bad = validate_circular(G, col)
    out = {
        "n": params.n, "k": params.k, "r": params.r,
        "modulus": col.modulus, "gap": col.gap,
        "colors": [{"vertex": list(P.points), "color": col[i]} for i, P in enumerate(G.vertices)],
        "valid": ok,
        "violations": [[u, v] for u, v in bad],
    }
    if ok:
        classes = derive_proper_coloring(col)
        out["proper_classes"] = len(set(classes.values()))
    _emit(dumps(out), args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certify(args) -> int:
    params = Parameters(args.n, args.k, args.r)
    start = time.perf_counter()
    checks = certify(
        params,
        alpha=args.all or args.alpha_exact,
        chi=args.all or args.chi_exact,
        circular=args.all or args.circular_exact,
        claims=args.all or args.claims,
        max_order=args.max_order,
        seed=args.seed,
        samples=args.samples,
        cap=args.cap,
        node_budget=args.node_budget,
    )
    report = {
        "params": {"n": params.n, "k": params.k, "r": params.r},
        "command": "certify",
        "results": {c.name: c.asdict() for c in checks},
        "backend": kernels.BACKEND,
    }
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        paths = {}
        for c in checks:
            if c.witness is not None:
                path = os.path.join(args.witness_dir, f"{c.name}_{params.n}_{params.k}_{params.r}.json")
                with open(path, "w") as fh:
                    fh.write(dumps(c.witness))
                paths[c.name] = path
        report["witness_files"] = paths
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - start, 3)
    _emit(dumps(report), args.output)
    for c in checks:
        log.info("%-16s %s", c.name, c.status)
    return EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK


COMMANDS = {"build": cmd_build, "color": cmd_color, "certify": cmd_certify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except InvalidParameters as exc:
        print(f"interlace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"interlace: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
