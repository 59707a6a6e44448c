"""Compare the compiled and numpy kernel backends on king grids.

    python benchmarks/bench_backends.py --sizes 1000,10000 --repeat 3
"""

import argparse
import time

import numpy as np

from helly import _backend, bfs, build_gate_tables, find_center
from helly.generators import gen_king_grid, grid_shape


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,10000,40000")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = _backend.available()
    before = _backend.kernels
    print(f"{'n':>7} {'task':<12}" + "".join(f"{nm:>12}" for nm in names) + "   speedup")
    for n in map(int, args.sizes.split(",")):
        g = gen_king_grid(*grid_shape(n))
        d0 = bfs(g, 0)
        tasks = {
            "bfs": lambda: _backend.kernels.bfs(g.indptr, g.indices, 0),
            "gate-tables": lambda: build_gate_tables(g, 0, d0),
            "balls": lambda: _backend.kernels.intersect_balls(
                g.indptr, g.indices, np.arange(0, g.n, max(1, g.n // 50)), 10,
                np.ones(g.n, dtype=bool)),
            "find-center": lambda: find_center(g, None, 0),
        }
        for task, fn in tasks.items():
            ms = []
            for nm in names:
                _backend.use(nm)
                ms.append(best_of(fn, args.repeat))
            speed = f"{ms[-1] / ms[0]:8.1f}x" if len(ms) > 1 else ""
            print(f"{g.n:>7} {task:<12}" + "".join(f"{t:12.2f}" for t in ms) + speed)
    _backend.kernels = before


if __name__ == "__main__":
    main()
