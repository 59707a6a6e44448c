"""Shared graph fixtures, corpus builders and slow reference routines."""

import itertools
from functools import lru_cache

import numpy as np

from helly import from_edge_list
from helly.generators import gen_interval, gen_king_grid, gen_tree


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n):
    return from_edge_list(n, list(itertools.combinations(range(n), 2)))


def random_connected(rng, n, extra=0.2):
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    edges = [(int(rng.integers(i)), i) for i in range(1, n)]
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < extra:
            edges.append((u, v))
    return from_edge_list(n, edges)


def floyd_warshall(g):
    n = g.n
    D = np.full((n, n), n + 1, dtype=np.int64)
    np.fill_diagonal(D, 0)
    for u, v in g.edges():
        D[u, v] = D[v, u] = 1
    for k in range(n):
        D = np.minimum(D, D[:, k:k + 1] + D[k:k + 1, :])
    return D


@lru_cache(maxsize=None)
def helly_corpus():
    """At least 300 Helly graphs with 2 <= n <= 200.

    Trees and interval graphs are Helly by the subclass facts; king grids
    are strong products of paths.
    """
    out = []
    sizes = np.random.default_rng(7).integers(2, 201, size=120)
    for i, n in enumerate(sizes):
        out.append(("tree", gen_tree(int(n), 1000 + i)))
    sizes = np.random.default_rng(8).integers(2, 201, size=120)
    for i, n in enumerate(sizes):
        dens = (1.0, 2.0, 5.0)[i % 3]
        out.append(("interval", gen_interval(int(n), 2000 + i, dens)))
    for side in range(3, 21):
        out.append(("king-grid", gen_king_grid(side, side)))
    shapes = [(r, c) for r in range(1, 21) for c in range(r + 1, 21) if 2 <= r * c <= 200]
    pick = np.random.default_rng(9).choice(len(shapes), size=42, replace=False)
    for j in sorted(pick):
        out.append(("king-grid", gen_king_grid(*shapes[j])))
    return tuple(out)


def small_corpus(max_n=60):
    return [(f, g) for f, g in helly_corpus() if g.n <= max_n]


def balls_of(g, D):
    """All distinct balls as frozensets."""
    out = set()
    for z in range(g.n):
        for r in range(int(D[z].max()) + 1):
            out.add(frozenset(np.flatnonzero(D[z] <= r).tolist()))
    return list(out)


def helly_by_definition(g, k, D=None):
    """Check k-Hellyness straight from the definition over every ball family."""
    D = floyd_warshall(g) if D is None else D
    balls = balls_of(g, D)
    for size in range(k + 1, len(balls) + 1):
        for fam in itertools.combinations(balls, size):
            if frozenset.intersection(*fam):
                continue
            if all(frozenset.intersection(*sub) for sub in itertools.combinations(fam, k)):
                return False
    return True
