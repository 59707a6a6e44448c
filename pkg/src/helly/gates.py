"""Gates, pseudo-gates and the per-neighbour q+/q=/q- aggregation.

Everything here is relative to a pivot ``v`` and the set ``S = N[v]``. For
a vertex ``w`` at distance ``d >= 2`` from ``v`` we have
``dist(w, S) = d - 1`` and the projection ``Pr(w, S)`` is the set of
neighbours of ``v`` at distance ``d - 1`` from ``w``.

* A gate ``g(w)`` lies at distance ``d - 2`` from ``w`` and is adjacent to
  every vertex of ``Pr(w, S)``. It always sits at distance exactly 2 from
  the pivot.
* A pseudo-gate ``pg(w)`` lies within distance ``d - 1`` of ``w`` and its
  closed neighbourhood contains every vertex of ``S`` within distance
  ``d`` of ``w``. Since ``v`` itself is such a vertex, ``pg(w)`` is a
  neighbour of ``v`` in ``Pr(w, S)``.

Construction works layer by layer on the BFS tree of the pivot. Each vertex
carries two bit rows over the neighbour list of ``v``: its trace
(``Pr(w, S)``) and its reach (neighbours of ``v`` within distance ``d``).
A gate is first inherited from a BFS parent (tier 1); in a Helly graph some
parent always has the same trace as ``w``, so this only falls through to
the exhaustive scan of the distance-2 layer (tier 2) on non-Helly inputs.
Pseudo-gates are inherited from parents when possible and otherwise found
by scanning the trace of ``w``.
"""

import logging
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import GateNotFoundError
from .graph import as_costs, bfs
from .sets import CandidateSet

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GateTables:
    pivot: int
    dist_v: np.ndarray
    gate: np.ndarray
    pgate: np.ndarray
    gate_fallbacks: int = 0
    pgate_fallbacks: int = 0

    @property
    def far(self):
        """Vertices at distance >= 2 from the pivot."""
        return np.flatnonzero(self.dist_v >= 2)


@dataclass(frozen=True, eq=False)
class QValues:
    """q-values of every neighbour of the pivot, aligned with ``neighbors``."""

    neighbors: np.ndarray
    q_plus: np.ndarray
    q_eq: np.ndarray
    q_minus: np.ndarray
    total: int

    def __getitem__(self, u):
        i = int(np.searchsorted(self.neighbors, u))
        if i >= self.neighbors.size or self.neighbors[i] != u:
            raise KeyError(u)
        return int(self.q_minus[i]), int(self.q_eq[i]), int(self.q_plus[i])

    def as_dict(self):
        return {
            int(u): (int(a), int(b), int(c))
            for u, a, b, c in zip(self.neighbors, self.q_minus, self.q_eq, self.q_plus)
        }

    def __eq__(self, other):
        if not isinstance(other, QValues):
            return NotImplemented
        return (
            np.array_equal(self.neighbors, other.neighbors)
            and np.array_equal(self.q_plus, other.q_plus)
            and np.array_equal(self.q_eq, other.q_eq)
            and np.array_equal(self.q_minus, other.q_minus)
        )


def build_gate_tables(g, v, dist=None):
    """Gate and pseudo-gate tables for pivot ``v``.

    ``dist`` may carry an existing BFS row from ``v``. Raises
    :class:`GateNotFoundError` when some vertex has no gate or pseudo-gate,
    which can only happen if ``g`` is not Helly.
    """
    if dist is None:
        dist = bfs(g, v)
    gate, pgate, gfb, pfb, bad, kind = _backend.kernels.gate_tables(
        g.indptr, g.indices, int(v), dist
    )
    if kind:
        raise GateNotFoundError(int(v), bad, "gate" if kind == 1 else "pseudo-gate")
    if gfb or pfb:
        log.debug("pivot %d: %d gate and %d pseudo-gate fallbacks", v, gfb, pfb)
    return GateTables(int(v), dist, gate, pgate, int(gfb), int(pfb))


def _membership(g, A):
    if A is None:
        return np.ones(g.n, dtype=bool)
    if isinstance(A, CandidateSet):
        return A.to_mask()
    A = np.asarray(A)
    if A.dtype == bool:
        return A
    mask = np.zeros(g.n, dtype=bool)
    mask[A.astype(np.int64)] = True
    return mask


def q_values(g, tables, A, c):
    """q-values of every neighbour of ``tables.pivot`` w.r.t. the set ``A``.

    ``A`` may be a :class:`CandidateSet`, a boolean mask, an index array,
    or ``None`` for the whole vertex set. Runs in O(m) once the tables
    exist.
    """
    c = as_costs(g, c)
    in_a = _membership(g, A)
    q_minus, q_le = _backend.kernels.q_partial(
        g.indptr, g.indices, tables.pivot, tables.dist_v,
        tables.gate, tables.pgate, in_a, c.costs,
    )
    total = int(c.costs[in_a].sum())
    return QValues(
        neighbors=np.asarray(g.neighbors(tables.pivot)),
        q_plus=total - q_le,
        q_eq=q_le - q_minus,
        q_minus=q_minus,
        total=total,
    )


def q_values_baseline(g, v, A, c):
    """Reference q-values from one BFS per neighbour; works on any graph."""
    c = as_costs(g, c)
    in_a = _membership(g, A)
    wc = np.where(in_a, c.costs, 0)
    dv = bfs(g, v)
    nbrs = np.asarray(g.neighbors(v))
    qp, qe, qm = (np.zeros(nbrs.size, dtype=np.int64) for _ in range(3))
    for i, u in enumerate(nbrs):
        du = bfs(g, int(u))
        qp[i] = wc[du > dv].sum()
        qe[i] = wc[du == dv].sum()
        qm[i] = wc[du < dv].sum()
    return QValues(nbrs, qp, qe, qm, int(wc.sum()))
