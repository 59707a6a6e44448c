"""Randomised radius computation for k-Helly and (k, alpha)-Helly graphs.

``decide_radius(r)`` never rejects when some vertex has eccentricity at
most ``r``. When it accepts on a (k, alpha)-Helly graph, the radius is at
most ``r + alpha``. Binary search over ``r`` turns the decision procedure
into a radius estimate ``R`` with ``R <= rad(G) <= R + alpha``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import InputError, SamplingFailureError
from .graph import bfs
from .sets import CandidateSet

ACCEPT = "accept"
REJECT = "reject"
EPS_SCALE = 3.0


def default_eps(n, k, scale=EPS_SCALE):
    """``min(1/2, sqrt(scale * ln n / (k n)))``: balances sampling and pruning work."""
    return min(0.5, math.sqrt(scale * math.log(max(n, 2)) / (k * n)))


def sample_count(n, eps):
    """Number of samples giving per-vertex error probability at most n^-3."""
    return math.ceil(3 * math.log(max(n, 2)) / eps)


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _dominating(g, r, eps, rng):
    s = sample_count(g.n, eps)
    samples = rng.integers(0, g.n, size=s)
    mask, runs = _backend.kernels.intersect_balls(
        g.indptr, g.indices, samples, int(r), np.ones(g.n, dtype=bool)
    )
    return CandidateSet.from_mask(mask), runs


def dominating_candidates(g, r, eps, seed=0):
    """Vertices whose ``r``-ball contains every one of ``ceil(3 ln n / eps)`` random samples.

    Every vertex of eccentricity at most ``r`` is always included. A vertex
    whose ``r``-ball misses more than ``eps * n`` vertices survives with
    probability at most ``n^-3``.
    """
    if r < 0:
        raise InputError("r must be non-negative")
    if not 0 < eps < 1:
        raise InputError("eps must lie in (0, 1)")
    return _dominating(g, r, eps, _rng(seed))[0]


@dataclass
class DecisionOutcome:
    verdict: str
    witness: int = None
    r: int = 0
    k: int = 2
    eps: float = 0.0
    bfs_count: int = 0
    restarts: int = 0
    candidates: list = field(default_factory=list)
    separators: list = field(default_factory=list)

    @property
    def accepted(self):
        return self.verdict == ACCEPT


def _decide_once(g, r, k, eps, rng, out):
    n = g.n
    C, runs = _dominating(g, r, eps, rng)
    out.bfs_count += runs
    out.candidates.append(len(C))
    if not C:
        out.verdict = REJECT
        return True
    for _ in range(k):
        v = C.min()
        dist = bfs(g, v)
        out.bfs_count += 1
        if dist.max() <= r:
            out.verdict, out.witness = ACCEPT, v
            return True
        outside = dist > r
        if outside.sum() > eps * n:
            return False
        out.separators.append(CandidateSet.from_mask(outside))
        mask, runs = _backend.kernels.intersect_balls(
            g.indptr, g.indices, np.flatnonzero(outside), int(r), C.to_mask()
        )
        out.bfs_count += runs
        C = CandidateSet.from_mask(mask)
        out.candidates.append(len(C))
        if not C:
            out.verdict = REJECT
            return True
    out.verdict = ACCEPT
    return True


def decide_radius(g, r, k=2, seed=0, eps=None, eps_scale=EPS_SCALE):
    """Accept or reject ``rad(G) <= r`` in ``k`` pruning rounds.

    Reject implies ``rad(G) > r``. Accept implies ``rad(G) <= r + alpha``
    when ``g`` is (k, alpha)-Helly; an accepting outcome carries a
    ``witness`` vertex when one of eccentricity ``<= r`` was met on the way.
    A sampling failure triggers one restart with fresh randomness and then
    raises :class:`SamplingFailureError`.
    """
    if k < 2:
        raise InputError("k must be at least 2")
    if r < 0:
        raise InputError("r must be non-negative")
    eps = default_eps(g.n, k, eps_scale) if eps is None else eps
    rng = _rng(seed)
    out = DecisionOutcome(REJECT, r=int(r), k=k, eps=eps)
    for attempt in range(2):
        out.candidates.clear()
        out.separators.clear()
        if _decide_once(g, r, k, eps, rng, out):
            return out
        out.restarts = attempt + 1
    raise SamplingFailureError(
        f"sampling failure at r={r}: a surviving candidate missed more than eps*n vertices twice"
    )


@dataclass
class RadiusResult:
    R: int
    alpha: int = 0
    decision_calls: int = 0
    bfs_count: int = 0
    witness: int = None

    @property
    def guarantee(self):
        return (self.R, self.R + self.alpha)

    def __str__(self):
        return f"R {self.R} guarantee [{self.R}, {self.R + self.alpha}]"


def radius(g, k=2, alpha=0, seed=0, eps_scale=EPS_SCALE):
    """Binary search over ``decide_radius``; ``rad(G)`` lies in ``[R, R + alpha]``."""
    if alpha < 0:
        raise InputError("alpha must be non-negative")
    rng = _rng(seed)
    lo, hi = 0, g.n - 1
    res = RadiusResult(0, alpha)
    while lo < hi:
        mid = (lo + hi) // 2
        out = decide_radius(g, mid, k, rng, eps_scale=eps_scale)
        res.decision_calls += 1
        res.bfs_count += out.bfs_count
        if out.accepted:
            hi = mid
            res.witness = out.witness
        else:
            lo = mid + 1
    res.R = lo
    return res
