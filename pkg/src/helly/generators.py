"""Seeded generators for Helly and chordal graph families.

Every generator is a pure function of its arguments: the same parameters
and seed always give the same edge list. Retries (to obtain a connected
interval graph) evolve the seed deterministically.
"""

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import from_edge_list

HELLY_FAMILIES = ("tree", "interval", "king-grid")
FAMILIES = HELLY_FAMILIES + ("chordal",)
MAX_ATTEMPTS = 100


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated graph.

    ``n`` is the vertex count. King grids use ``rows`` x ``cols`` when given,
    else the most square grid with at most ``n`` vertices. ``density``
    scales interval lengths (interval family) or clique sizes (chordal).
    """

    family: str
    n: int = 0
    seed: int = 0
    rows: int = None
    cols: int = None
    density: float = 1.0


def _rng(seed, attempt=0):
    return np.random.default_rng([int(seed) & (2**64 - 1), attempt])


def gen_tree(n, seed=0):
    """Uniform random labelled tree from a random Pruefer sequence."""
    if n < 1:
        raise InputError("tree needs n >= 1")
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = _rng(seed).integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def _interval_edges(lo, hi):
    order = np.argsort(lo, kind="stable")
    edges = []
    # sweep by left endpoint; intervals i < j in order overlap iff lo[j] <= hi[i]
    for a, i in enumerate(order):
        for j in order[a + 1:]:
            if lo[j] > hi[i]:
                break
            edges.append((int(i), int(j)))
    return edges


def _spans_connected(lo, hi):
    order = np.argsort(lo, kind="stable")
    reach = hi[order[0]]
    for i in order[1:]:
        if lo[i] > reach:
            return False
        reach = max(reach, hi[i])
    return True


def gen_interval(n, seed=0, density=1.0):
    """Random connected interval graph.

    Left endpoints are uniform in ``[0, 4n]``; lengths are uniform in
    ``[0, L]`` with ``L = ceil(12 * density * ln(4n))``, clipped to
    ``4n``. Draws are repeated (at most 100 times) until connected; with
    ``density`` much below 1 the union of intervals usually has gaps and
    generation fails.
    """
    if n < 1:
        raise InputError("interval graph needs n >= 1")
    if density <= 0:
        raise InputError("density must be positive")
    span = 4 * n
    longest = min(span, max(1, math.ceil(12 * density * math.log(max(span, 2)))))
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(seed, attempt)
        lo = rng.integers(0, span + 1, size=n)
        hi = np.minimum(lo + rng.integers(0, longest + 1, size=n), span)
        if _spans_connected(lo, hi):
            return from_edge_list(n, _interval_edges(lo, hi))
    raise InputError(f"no connected interval graph after {MAX_ATTEMPTS} draws")


def gen_king_grid(rows, cols):
    """Strong product of the paths P_rows and P_cols; vertex ``i*cols + j``."""
    if rows < 1 or cols < 1:
        raise InputError("grid dimensions must be positive")
    idx = np.arange(rows * cols).reshape(rows, cols)
    pairs = [
        (idx[:, :-1], idx[:, 1:]),
        (idx[:-1, :], idx[1:, :]),
        (idx[:-1, :-1], idx[1:, 1:]),
        (idx[:-1, 1:], idx[1:, :-1]),
    ]
    edges = np.concatenate(
        [np.stack([a.ravel(), b.ravel()], axis=1) for a, b in pairs]
    )
    return from_edge_list(rows * cols, edges)


def grid_shape(n):
    """Most square ``rows x cols`` grid with at most ``n`` vertices."""
    rows = max(1, math.isqrt(n))
    return rows, max(1, n // rows)


def gen_helly(spec):
    """Graph from one of the Helly families ``tree``, ``interval``, ``king-grid``."""
    if spec.family == "tree":
        return gen_tree(spec.n, spec.seed)
    if spec.family == "interval":
        return gen_interval(spec.n, spec.seed, spec.density)
    if spec.family == "king-grid":
        if spec.rows is not None:
            return gen_king_grid(spec.rows, spec.cols if spec.cols is not None else spec.rows)
        if spec.n < 1:
            raise InputError("king grid needs n >= 1")
        return gen_king_grid(*grid_shape(spec.n))
    raise InputError(f"unknown Helly family {spec.family!r}; expected one of {HELLY_FAMILIES}")


def gen_chordal(n, density=0.5, seed=0):
    """Random connected chordal graph grown as a clique tree.

    Each new bag copies a random non-empty subset of an existing bag and
    adds fresh vertices up to a size drawn from ``[2, 2 + round(6 * density)]``.
    Reversed creation order is a perfect elimination ordering.
    """
    if n < 1:
        raise InputError("chordal graph needs n >= 1")
    if not 0 <= density <= 1:
        raise InputError("density must lie in [0, 1]")
    rng = _rng(seed)
    top = 2 + int(round(6 * density))
    size = min(n, int(rng.integers(2, top + 1)))
    bags = [list(range(size))]
    edges = [(a, b) for a in range(size) for b in range(a + 1, size)]
    nxt = size
    while nxt < n:
        base = bags[int(rng.integers(len(bags)))]
        keep = int(rng.integers(1, len(base) + 1))
        shared = rng.choice(base, size=keep, replace=False).tolist()
        want = int(rng.integers(2, top + 1))
        fresh = list(range(nxt, min(n, nxt + max(1, want - keep))))
        nxt += len(fresh)
        bag = shared + fresh
        for i, a in enumerate(fresh):
            edges.extend((b, a) for b in shared)
            edges.extend((b, a) for b in fresh[:i])
        bags.append(bag)
    return from_edge_list(n, edges)


def generate(family, n, seed=0, density=None):
    """Dispatch used by the CLI: any family in :data:`FAMILIES`."""
    if family == "chordal":
        return gen_chordal(n, 0.5 if density is None else density, seed)
    return gen_helly(GenSpec(family, n, seed, density=1.0 if density is None else density))


def has_perfect_elimination_order(g):
    """True iff ``g`` is chordal (maximum cardinality search + verification)."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    nbrs = [set(g.neighbors(v).tolist()) for v in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        order.append(v)
        for u in nbrs[v]:
            if not visited[u]:
                weight[u] += 1
    pos = {v: i for i, v in enumerate(order)}
    # reversed MCS order is a PEO iff chordal
    for v in order:
        before = [u for u in nbrs[v] if pos[u] < pos[v]]
        if not before:
            continue
        p = max(before, key=pos.get)
        if any(u != p and u not in nbrs[p] for u in before):
            return False
    return True
