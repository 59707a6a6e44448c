"""Brute-force ground truth from one BFS per vertex.

These routines make no Helly assumption, so they also characterise the
behaviour of non-Helly graphs in negative tests.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _backend
from .errors import InstanceTooLargeError
from .graph import as_costs

DESK_MAX_N = 5000


@dataclass(frozen=True, eq=False)
class ApspSummary:
    ecc: np.ndarray
    total: np.ndarray
    ecc_unit: np.ndarray
    radius: int
    diameter: int
    center: tuple
    median: tuple


def apsp_summary(g, c=None, max_n=DESK_MAX_N, threads=1):
    """Exact cost eccentricities, total distances, radius, diameter and argmin sets.

    ``radius`` is the minimum cost eccentricity; ``diameter`` uses unit
    costs. ``threads > 1`` splits the BFS rows across worker threads.
    """
    if max_n is not None and g.n > max_n:
        raise InstanceTooLargeError(f"n={g.n} exceeds the oracle budget of {max_n}")
    c = as_costs(g, c)
    rows = np.arange(g.n, dtype=np.int64)
    kern = _backend.kernels
    if threads > 1 and g.n > 1:
        chunks = np.array_split(rows, threads)
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(
                lambda r: kern.apsp_reduce(g.indptr, g.indices, c.costs, r), chunks
            ))
        ecc, total, ecc_u = (np.concatenate(p) for p in zip(*parts))
    else:
        ecc, total, ecc_u = kern.apsp_reduce(g.indptr, g.indices, c.costs, rows)
    rad = int(ecc.min())
    best = int(total.min())
    return ApspSummary(
        ecc=ecc,
        total=total,
        ecc_unit=ecc_u,
        radius=rad,
        diameter=int(ecc_u.max()),
        center=tuple(np.flatnonzero(ecc == rad).tolist()),
        median=tuple(np.flatnonzero(total == best).tolist()),
    )


def distance_matrix(g, max_n=DESK_MAX_N):
    """Full n x n hop-distance matrix (int32)."""
    if max_n is not None and g.n > max_n:
        raise InstanceTooLargeError(f"n={g.n} exceeds the oracle budget of {max_n}")
    return _backend.kernels.distance_matrix(g.indptr, g.indices)


class GateCheck(NamedTuple):
    ok: bool
    vertex: int = None
    clause: str = None

    def __bool__(self):
        return self.ok


def verify_gate_tables(g, tables, dist=None):
    """Check every gate and pseudo-gate entry against its defining contract.

    Recomputes projections and ball memberships from a full distance matrix
    (pass ``dist`` to reuse one). Returns a :class:`GateCheck` naming the
    first offending vertex and clause.
    """
    D = distance_matrix(g) if dist is None else dist
    v = tables.pivot
    dv = D[v]
    if not np.array_equal(np.asarray(tables.dist_v), dv):
        return GateCheck(False, v, "pivot distance row")
    nbrs = np.flatnonzero(dv == 1)
    closed = np.flatnonzero(dv <= 1)
    far = np.flatnonzero(dv >= 2)
    if not far.size:
        return GateCheck(True)
    d = dv[far]
    gate = np.asarray(tables.gate)[far].astype(np.int64)
    pgate = np.asarray(tables.pgate)[far].astype(np.int64)

    missing = (gate < 0) | (pgate < 0)
    if missing.any():
        return GateCheck(False, int(far[missing][0]), "entry missing")

    proj = D[np.ix_(nbrs, far)] == d - 1  # Pr(w, S) as columns
    adj_n = D[nbrs] == 1  # rows: x in N(v), cols: every vertex
    checks = []

    bad = D[far, gate] > d - 2
    checks.append((bad, "gate too far from w"))
    bad = (proj & ~adj_n[:, gate]).any(axis=0)
    checks.append((bad, "gate misses a projection vertex"))

    bad = D[far, pgate] > d - 1
    checks.append((bad, "pseudo-gate too far from w"))
    near = D[np.ix_(closed, far)] <= d
    covered = D[np.ix_(closed, pgate)] <= 1
    bad = (near & ~covered).any(axis=0)
    checks.append((bad, "pseudo-gate misses a vertex of S"))

    # every valid gate z of w: dist(z, w) <= d-2 and Pr(w, S) within N(z)
    hits = adj_n.T.astype(np.int64) @ proj.astype(np.int64)
    valid = (hits == proj.sum(axis=0)) & (D[:, far] <= d - 2)
    near_pg = D[:, pgate] <= 1
    bad = ~(valid & near_pg).any(axis=0)
    checks.append((bad, "pseudo-gate not next to any gate"))

    first = None
    for bad, clause in checks:
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            if first is None or i < first[0]:
                first = (i, clause)
    if first is not None:
        return GateCheck(False, int(far[first[0]]), first[1])
    return GateCheck(True)
