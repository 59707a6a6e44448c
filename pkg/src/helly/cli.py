"""Command-line front end.

Exit codes: 0 success, 1 input/validation error, 2 algorithmic failure.
"""

import argparse
import secrets
import sys

import numpy as np

from . import _backend
from .bench import COMMANDS, run_bench, write_csv
from .errors import AlgorithmError, InputError
from .facility import find_center, find_medians
from .generators import FAMILIES, generate
from .graph import CostFn, from_edge_list
from .khelly import EPS_SCALE, radius
from .oracle import DESK_MAX_N, apsp_summary
from .recognition import is_k_alpha_helly

DEFAULT_SEED = 20240601


def parse_graph_text(text):
    """Parse the edge-list format: ``# comments``, ``p <n> <m>``, then ``u v`` lines."""
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 3 or parts[0] != "p":
                raise InputError(f"line {lineno}: expected header 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise InputError(f"line {lineno}: header counts must be integers") from None
            if n < 1 or m < 0:
                raise InputError(f"line {lineno}: need n >= 1 and m >= 0")
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise InputError("missing header 'p <n> <m>'")
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def parse_graph_file(path):
    with open(path) as fh:
        return parse_graph_text(fh.read())


def parse_cost_text(text, n):
    """``<vertex> <cost>`` lines; unlisted vertices cost 1."""
    costs = np.ones(n, dtype=np.int64)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"cost line {lineno}: expected '<vertex> <cost>'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"cost line {lineno}: vertex and cost must be integers") from None
        if not 0 <= v < n:
            raise InputError(f"cost line {lineno}: vertex {v} out of range")
        if c < 0:
            raise InputError(f"cost line {lineno}: negative cost {c}")
        if c > np.iinfo(np.int64).max:
            raise InputError(f"cost line {lineno}: cost exceeds 64-bit range")
        costs[v] = c
    return CostFn(costs)


def parse_cost_file(path, n):
    with open(path) as fh:
        return parse_cost_text(fh.read(), n)


def format_graph(g):
    lines = [f"p {g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _seed(text):
    if text == "random":
        return secrets.randbits(63)
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("seed must be an integer or 'random'") from None


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None


def build_parser():
    ap = argparse.ArgumentParser(prog="helly", description=__doc__)
    ap.add_argument("--threads", type=int, default=1, help="worker cap for oracle BFS rows")
    ap.add_argument("--backend", choices=["auto", "cython", "python"], default="auto")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_args(p, costs=True):
        p.add_argument("--graph", required=True)
        if costs:
            p.add_argument("--costs")
        p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)

    p = sub.add_parser("center", help="cost-weighted central vertex")
    graph_args(p)
    p.add_argument("--verify", action="store_true", help="compare with the brute-force oracle")
    p = sub.add_parser("median", help="cost-weighted median set")
    graph_args(p)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("radius", help="radius of a (k, alpha)-Helly graph")
    graph_args(p, costs=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--eps-scale", type=float, default=EPS_SCALE)

    p = sub.add_parser("check", help="brute-force (k, alpha)-Helly test")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--density", type=float)
    p.add_argument("--out")

    p = sub.add_parser("bench", help="benchmark runs as CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seeds", type=_int_list, default=[0])
    p.add_argument("--commands", default="center,oracle")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--graph-seed", type=int)
    p.add_argument("--out", default="-")
    return ap


def _load(args):
    g = parse_graph_file(args.graph)
    c = parse_cost_file(args.costs, g.n) if getattr(args, "costs", None) else None
    return g, c


def _verify(g, c, threads, out):
    if g.n > DESK_MAX_N:
        print(f"verify skipped n={g.n} > {DESK_MAX_N}", file=out)
        return None
    return apsp_summary(g, c, threads=threads)


def _run(args, out):
    if args.command == "center":
        g, c = _load(args)
        v, val, _ = find_center(g, c, args.seed)
        print(f"vertex {v} ecc {val}", file=out)
        if args.verify:
            s = _verify(g, c, args.threads, out)
            if s is not None:
                ok = s.radius == val
                print(f"verify {'agree' if ok else 'disagree'} oracle {s.radius}", file=out)
                if not ok:
                    raise AlgorithmError("center value disagrees with the oracle")
    elif args.command == "median":
        g, c = _load(args)
        vs, val, _ = find_medians(g, c, args.seed)
        print("median " + " ".join(map(str, vs)) + f" value {val}", file=out)
        if args.verify:
            s = _verify(g, c, args.threads, out)
            if s is not None:
                ok = tuple(s.median) == tuple(vs)
                print(f"verify {'agree' if ok else 'disagree'} oracle "
                      + " ".join(map(str, s.median)), file=out)
                if not ok:
                    raise AlgorithmError("median set disagrees with the oracle")
    elif args.command == "radius":
        g, _ = _load(args)
        print(radius(g, args.k, args.alpha, args.seed, args.eps_scale), file=out)
    elif args.command == "check":
        g = parse_graph_file(args.graph)
        print(is_k_alpha_helly(g, args.k, args.alpha), file=out)
    elif args.command == "gen":
        g = generate(args.family, args.n, args.seed, args.density)
        text = format_graph(g)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            out.write(text)
    elif args.command == "bench":
        cmds = [x for x in args.commands.split(",") if x]
        unknown = set(cmds) - set(COMMANDS)
        if unknown:
            raise InputError(f"unknown bench commands {sorted(unknown)}")
        recs = run_bench(args.family, args.sizes, args.seeds, cmds, args.k, args.alpha,
                         args.threads, args.graph_seed)
        if args.out == "-":
            write_csv(recs, out)
        else:
            with open(args.out, "w", newline="") as fh:
                write_csv(recs, fh)
    return 0


def dispatch(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.backend != "auto":
        _backend.use(args.backend)
    try:
        return _run(args, out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AlgorithmError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
