"""Immutable graphs in CSR form, BFS distances, balls and cost objectives."""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import InputError, NotConnectedError, OutOfRangeError
from .sets import CandidateSet

INT64_MAX = np.iinfo(np.int64).max


class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    Adjacency is stored as an offset array ``indptr`` and a neighbour array
    ``indices``; every neighbour list is sorted ascending. Both arrays are
    read-only, so a graph may be shared freely between threads.
    """

    __slots__ = ("indptr", "indices", "n", "m")

    def __init__(self, indptr, indices):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int32)
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False
        self.n = len(self.indptr) - 1
        self.m = len(self.indices) // 2

    @classmethod
    def from_edge_list(cls, n, edges):
        return from_edge_list(n, edges)

    def neighbors(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self):
        return np.diff(self.indptr)

    def has_edge(self, u, v):
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return i < nb.size and nb[i] == v

    def edges(self):
        """Edge list ``[(u, v), ...]`` with ``u < v``, lexicographically sorted."""
        rows = np.repeat(np.arange(self.n), self.degrees())
        keep = rows < self.indices
        return list(zip(rows[keep].tolist(), self.indices[keep].tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.indptr, other.indptr) and np.array_equal(
            self.indices, other.indices
        )

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n, edges):
    """Build a canonical :class:`Graph`; duplicate edges are collapsed.

    Raises :class:`InputError` for self-loops or out-of-range endpoints and
    :class:`NotConnectedError` if some vertex is unreachable from vertex 0.
    """
    if n < 1:
        raise InputError("graph needs at least one vertex")
    arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
        raise InputError(f"edge ({bad[0]}, {bad[1]}) has an endpoint outside 0..{n - 1}")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        raise InputError(f"self-loop at vertex {arr[loops][0, 0]}")
    both = np.concatenate([arr, arr[:, ::-1]])
    both = np.unique(both, axis=0) if both.size else both
    counts = np.bincount(both[:, 0], minlength=n) if both.size else np.zeros(n, np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    g = Graph(indptr, both[:, 1] if both.size else np.empty(0, np.int32))
    if n > 1 and (bfs(g, 0) < 0).any():
        raise NotConnectedError()
    return g


@dataclass(frozen=True, eq=False)
class CostFn:
    """Non-negative integer vertex costs."""

    costs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.costs)
        if arr.ndim != 1:
            raise InputError("costs must be a flat sequence")
        if arr.size and not np.issubdtype(arr.dtype, np.integer):
            if not np.all(np.equal(np.mod(arr, 1), 0)):
                raise InputError("costs must be integers")
        if arr.size and (arr.min() < 0):
            raise InputError("costs must be non-negative")
        if arr.size and arr.max() > INT64_MAX:
            raise OutOfRangeError("cost exceeds the 64-bit range")
        arr = np.array(arr, dtype=np.int64)
        arr.flags.writeable = False
        object.__setattr__(self, "costs", arr)

    @classmethod
    def unit(cls, n):
        return cls(np.ones(n, dtype=np.int64))

    def __len__(self):
        return len(self.costs)

    def __getitem__(self, v):
        return int(self.costs[v])

    def __eq__(self, other):
        return isinstance(other, CostFn) and np.array_equal(self.costs, other.costs)

    def __hash__(self):
        return hash(self.costs.tobytes())

    @property
    def total(self):
        return int(self.costs.sum())

    def is_zero(self):
        return not self.costs.any()


def as_costs(g, c=None):
    """Coerce ``c`` into a :class:`CostFn` valid for ``g`` (``None`` = unit)."""
    if c is None:
        c = CostFn.unit(g.n)
    elif not isinstance(c, CostFn):
        c = CostFn(c)
    if len(c) != g.n:
        raise InputError(f"cost function has {len(c)} entries, graph has {g.n} vertices")
    # every weighted sum is at most n * (n - 1) * max cost
    top = int(c.costs.max()) if g.n else 0
    if top and g.n * max(g.n - 1, 1) * top > INT64_MAX:
        raise OutOfRangeError(
            "costs too large for exact 64-bit accumulation on this graph"
        )
    return c


def bfs(g, source):
    """Hop distances from ``source`` to every vertex (int32 array)."""
    if not 0 <= source < g.n:
        raise InputError(f"vertex {source} out of range")
    return _backend.kernels.bfs(g.indptr, g.indices, int(source))


def ball(g, v, r):
    """The ball ``N^r[v]`` as a :class:`CandidateSet`."""
    if r < 0:
        raise InputError("radius must be non-negative")
    return CandidateSet.from_mask(bfs(g, v) <= r)


def eccentricity(g, c, v, dist=None):
    """``max_u c(u) * dist(u, v)``; pass ``dist`` to reuse a BFS row from ``v``."""
    c = as_costs(g, c)
    d = bfs(g, v) if dist is None else dist
    return int((c.costs * d).max())


def total_distance(g, c, v, dist=None):
    """``sum_u c(u) * dist(u, v)`` in exact 64-bit arithmetic."""
    c = as_costs(g, c)
    d = bfs(g, v) if dist is None else dist
    return int((c.costs * d).sum())
