"""Brute-force k-Helly and (k, alpha)-Helly tests, and a unimodality audit.

A graph is k-Helly iff for every (k+1)-subset ``S`` the balls meeting ``S``
in at least ``k`` vertices have a common vertex. Balls around one centre
are nested, so it suffices to intersect, per centre ``z``, the smallest
such ball: radius = k-th smallest distance from ``z`` to ``S``.
"""

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InstanceTooLargeError, InputError
from .graph import bfs
from .oracle import distance_matrix

DEFAULT_MAX_N = {2: 60, 3: 28}
DEFAULT_WORK = 28 ** 6


@dataclass(frozen=True)
class HellyReport:
    k: int
    alpha: int
    holds: bool
    witness: tuple = None
    radii: tuple = None

    def __str__(self):
        head = f"holds={'true' if self.holds else 'false'} k={self.k} alpha={self.alpha}"
        if self.witness is None:
            return head
        return head + " witness " + " ".join(map(str, self.witness))


def _guard(n, k, max_work):
    if max_work is None:
        limit = DEFAULT_MAX_N.get(k)
        if limit is not None:
            if n > limit:
                raise InstanceTooLargeError(
                    f"instance too large for exact recognition (n={n} > {limit} for k={k})"
                )
            return
        max_work = DEFAULT_WORK
    if n ** (k + 1) * n * n > max_work:
        raise InstanceTooLargeError(
            f"instance too large for exact recognition (n^(k+3) > {max_work})"
        )


def is_k_alpha_helly(g, k, alpha, max_work=None, dist=None):
    """Berge-style test with every minimal radius inflated by ``alpha``.

    With ``alpha = 0`` this is exactly k-Hellyness. For ``alpha > 0`` a
    passing result certifies only the subset condition, not every ball
    family.
    """
    if k < 2:
        raise InputError("k must be at least 2")
    if alpha < 0:
        raise InputError("alpha must be non-negative")
    n = g.n
    _guard(n, k, max_work)
    if n <= k:
        return HellyReport(k, alpha, True)
    D = distance_matrix(g, max_n=None) if dist is None else np.asarray(dist)
    batch = max(1, 4_000_000 // (n * n))
    combos = itertools.combinations(range(n), k + 1)
    while True:
        chunk = np.array(list(itertools.islice(combos, batch)), dtype=np.int64)
        if not chunk.size:
            return HellyReport(k, alpha, True)
        # (n centres, B subsets, k+1 members) -> k-th smallest distance
        r = np.partition(D[:, chunk], k - 1, axis=2)[:, :, k - 1] + alpha
        common = (D[:, :, None] <= r[None, :, :]).all(axis=1).any(axis=0)
        if not common.all():
            b = int(np.flatnonzero(~common)[0])
            return HellyReport(
                k, alpha, False,
                witness=tuple(chunk[b].tolist()),
                radii=tuple(r[:, b].tolist()),
            )


def is_k_helly(g, k, max_work=None, dist=None):
    """Exact k-Helly test over all (k+1)-subsets."""
    return is_k_alpha_helly(g, k, 0, max_work=max_work, dist=dist)


def check_witness(g, report):
    """Independently re-check a failing report with fresh BFS rows.

    True iff the witness radii are the minimal radii for the witness subset
    (plus ``alpha``) and the corresponding balls share no vertex.
    """
    if report.holds or report.witness is None:
        return False
    S = list(report.witness)
    if len(S) != report.k + 1 or len(set(S)) != len(S):
        return False
    rows = np.array([bfs(g, z) for z in range(g.n)])
    for z in range(g.n):
        ds = sorted(int(rows[z, s]) for s in S)
        if report.radii[z] != ds[report.k - 1] + report.alpha:
            return False
    radii = np.array(report.radii)
    return not any((rows[:, x] <= radii).all() for x in range(g.n))


class UnimodalCheck(NamedTuple):
    ok: bool
    vertex: int = None

    def __bool__(self):
        return self.ok


def check_unimodal(g, f):
    """Is every local minimum of ``f`` over the adjacency a global minimum?

    On failure, ``vertex`` is the smallest local-but-not-global minimum.
    """
    f = np.asarray(f)
    if f.shape != (g.n,):
        raise InputError("f must have one value per vertex")
    if g.n == 1:
        return UnimodalCheck(True)
    nb_min = np.minimum.reduceat(f[g.indices], g.indptr[:-1])
    local = f <= nb_min
    bad = np.flatnonzero(local & (f > f.min()))
    if bad.size:
        return UnimodalCheck(False, int(bad[0]))
    return UnimodalCheck(True)


def minimal_alpha(g, k=2, max_alpha=None, max_work=None):
    """Smallest alpha passing :func:`is_k_alpha_helly`, searched upward from 0."""
    D = distance_matrix(g, max_n=None)
    top = int(D.max()) if max_alpha is None else max_alpha
    for alpha in range(top + 1):
        if is_k_alpha_helly(g, k, alpha, max_work=max_work, dist=D).holds:
            return alpha
    return math.inf
