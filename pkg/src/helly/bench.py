"""Seeded benchmark harness: one CSV row per (command, size, seed) run."""

import csv
import time
from dataclasses import asdict, dataclass, fields

from .facility import find_center, find_medians
from .generators import generate
from .khelly import radius
from .oracle import apsp_summary

COMMANDS = ("center", "median", "radius", "oracle")


@dataclass
class RunRecord:
    command: str
    family: str
    n: int
    m: int
    seed: int
    steps: int = 0
    bfs_count: int = 0
    wallclock_ms: float = 0.0
    vertex: str = ""
    value: str = ""
    R: str = ""
    verdict: str = ""


HEADER = [f.name for f in fields(RunRecord)]


def run_one(command, g, family, seed, k=2, alpha=0, threads=1):
    rec = RunRecord(command, family, g.n, g.m, seed)
    t0 = time.perf_counter()
    if command == "center":
        v, val, tr = find_center(g, None, seed)
        rec.steps, rec.bfs_count, rec.vertex, rec.value = tr.steps, tr.bfs_count, str(v), str(val)
    elif command == "median":
        vs, val, tr = find_medians(g, None, seed)
        rec.steps, rec.bfs_count = tr.steps, tr.bfs_count
        rec.vertex, rec.value = " ".join(map(str, vs)), str(val)
    elif command == "radius":
        res = radius(g, k, alpha, seed)
        rec.steps, rec.bfs_count, rec.R = res.decision_calls, res.bfs_count, str(res.R)
        rec.verdict = f"[{res.R}, {res.R + alpha}]"
    elif command == "oracle":
        s = apsp_summary(g, None, max_n=None, threads=threads)
        rec.steps, rec.bfs_count = g.n, g.n
        rec.vertex, rec.value, rec.R = str(s.center[0]), str(s.radius), str(s.radius)
    else:
        raise ValueError(f"unknown bench command {command!r}")
    rec.wallclock_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def run_bench(family, sizes, seeds, commands=("center", "oracle"), k=2, alpha=0,
              threads=1, graph_seed=None):
    """Yield records for every size x seed x command.

    The graph for a given size is generated from ``graph_seed`` when set,
    else from the run seed, so algorithm seeds can vary on a fixed graph.
    """
    for n in sizes:
        for seed in seeds:
            g = generate(family, n, seed if graph_seed is None else graph_seed)
            for cmd in commands:
                yield run_one(cmd, g, family, seed, k, alpha, threads)


def write_csv(records, fh):
    w = csv.DictWriter(fh, fieldnames=HEADER, lineterminator="\n")
    w.writeheader()
    for rec in records:
        w.writerow(asdict(rec))
        fh.flush()


def read_csv(fh):
    rows = list(csv.DictReader(fh))
    for r in rows:
        for key in ("n", "m", "seed", "steps", "bfs_count"):
            r[key] = int(r[key])
        r["wallclock_ms"] = float(r["wallclock_ms"])
    return rows
