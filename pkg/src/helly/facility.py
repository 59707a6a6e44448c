"""Cost-weighted central vertex and median set by seeded local search.

On a Helly graph both the cost eccentricity and the cost total distance are
unimodal, so a descent that stops at a local minimum has found a global
one. Randomness only decides where the descent starts: the best vertex of
a random sample of expected size sqrt(n) is close, in descent steps, to
the optimum. Each step costs one BFS plus one gate-table build.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import InputError, StepBudgetExceededError
from .gates import build_gate_tables, q_values
from .graph import as_costs, bfs

ECCENTRICITY = "eccentricity"
TOTAL_DISTANCE = "total-distance"


@dataclass
class SearchTrace:
    """Descent path: vertices visited and the objective at each of them."""

    objective: str
    vertices: list = field(default_factory=list)
    values: list = field(default_factory=list)
    sample_size: int = 0
    bfs_count: int = 0
    gate_builds: int = 0
    gate_fallbacks: int = 0

    @property
    def steps(self):
        return max(0, len(self.vertices) - 1)

    def push(self, v, value):
        self.vertices.append(int(v))
        self.values.append(int(value))


class CenterResult(NamedTuple):
    vertex: int
    value: int
    trace: SearchTrace


class MedianResult(NamedTuple):
    vertices: tuple
    value: int
    trace: SearchTrace


def _objective(c, dist, objective):
    w = c.costs * dist
    return int(w.max()) if objective == ECCENTRICITY else int(w.sum())


def step_budget(n):
    """Default cap on descent steps: 10 * sqrt(n) * ln(n)."""
    return math.ceil(10 * math.sqrt(n) * math.log(max(n, 2)))


def sample_start(g, c, objective, seed=0, p=None):
    """Best vertex of a random sample ``U(p)``, with ``p = n^(-1/2)`` by default.

    Every vertex joins the sample independently with probability ``p``; an
    empty sample is replaced by one uniform vertex. Ties go to the smallest
    index. Returns ``(vertex, trace)`` where the trace holds the start.
    """
    if objective not in (ECCENTRICITY, TOTAL_DISTANCE):
        raise InputError(f"unknown objective {objective!r}")
    c = as_costs(g, c)
    rng = np.random.default_rng(seed)
    n = g.n
    p = 1 / math.sqrt(n) if p is None else p
    sample = np.flatnonzero(rng.random(n) < p)
    if not sample.size:
        sample = np.array([int(rng.integers(n))])
    best = best_val = None
    for s in sample:
        val = _objective(c, bfs(g, int(s)), objective)
        if best_val is None or val < best_val:
            best, best_val = int(s), val
    trace = SearchTrace(objective, sample_size=int(sample.size), bfs_count=int(sample.size))
    trace.push(best, best_val)
    return best, trace


def _tables(g, u, dist, trace):
    tables = build_gate_tables(g, u, dist)
    if trace is not None:
        trace.gate_builds += 1
        trace.gate_fallbacks += tables.gate_fallbacks + tables.pgate_fallbacks
    return tables


def _center_step(g, c, u, dist, trace=None):
    w = c.costs * dist
    ecc = int(w.max())
    if ecc == 0:
        return None
    in_a = w == ecc
    in_b = c.costs * (dist.astype(np.int64) + 1) >= ecc
    tables = _tables(g, u, dist, trace)
    qa = q_values(g, tables, in_a, c)
    qb = q_values(g, tables, in_b, c)
    better = (qa.q_plus == 0) & (qa.q_eq == 0) & (qb.q_plus == 0)
    hit = np.flatnonzero(better)
    return int(qa.neighbors[hit[0]]) if hit.size else None


def center_step(g, c, u):
    """A neighbour of ``u`` with strictly smaller cost eccentricity, or None.

    Uses the sets ``A`` (vertices realising ``e_c(u)``) and ``B`` (vertices
    that would reach ``e_c(u)`` one step further away): a neighbour ``v``
    improves iff every positive-cost vertex of ``A`` gets closer to ``v`` and
    none of ``B`` gets farther. Returns the smallest such ``v``.
    """
    c = as_costs(g, c)
    return _center_step(g, c, u, bfs(g, u))


def _descend(g, c, start, trace, step, max_steps):
    u = start
    dist = bfs(g, u)
    trace.bfs_count += 1
    budget = step_budget(g.n) if max_steps is None else max_steps
    while True:
        v = step(g, c, u, dist, trace)
        if v is None:
            return u, dist
        if trace.steps >= budget:
            raise StepBudgetExceededError(
                f"local search exceeded {budget} steps: input is probably not Helly"
            )
        dist = bfs(g, v)
        trace.bfs_count += 1
        trace.push(v, _objective(c, dist, trace.objective))
        u = v


def find_center(g, c=None, seed=0, max_steps=None, p=None):
    """A vertex minimising the cost eccentricity; returns ``(vertex, value, trace)``."""
    c = as_costs(g, c)
    if c.is_zero():
        return CenterResult(0, 0, SearchTrace(ECCENTRICITY, [0], [0]))
    start, trace = sample_start(g, c, ECCENTRICITY, seed, p)
    if trace.values[0] == 0:
        return CenterResult(start, 0, trace)
    u, _ = _descend(g, c, start, trace, _center_step, max_steps)
    return CenterResult(u, trace.values[-1], trace)


def _median_step(g, c, u, dist, trace=None):
    tables = _tables(g, u, dist, trace)
    q = q_values(g, tables, None, c)
    hit = np.flatnonzero(q.q_minus > q.q_plus)
    return int(q.neighbors[hit[0]]) if hit.size else None


def median_step(g, c, u):
    """A neighbour of ``u`` with strictly smaller total cost distance, or None.

    ``TD_c(u) - TD_c(v) = q_minus(v) - q_plus(v)`` with ``A = V``.
    """
    c = as_costs(g, c)
    return _median_step(g, c, u, bfs(g, u))


def find_medians(g, c=None, seed=0, max_steps=None, p=None):
    """All vertices minimising the total cost distance.

    Descends to one median ``u``, then adds every neighbour of ``u`` with
    the same total distance. This is the full median set whenever the
    median set is a clique, which holds on Helly graphs with positive
    costs; zero costs can break it (see README). With all costs zero every
    vertex is a median.
    """
    c = as_costs(g, c)
    if c.is_zero():
        return MedianResult(tuple(range(g.n)), 0, SearchTrace(TOTAL_DISTANCE, [0], [0]))
    start, trace = sample_start(g, c, TOTAL_DISTANCE, seed, p)
    if trace.values[0] == 0:
        return MedianResult((start,), 0, trace)
    u, dist = _descend(g, c, start, trace, _median_step, max_steps)
    tables = _tables(g, u, dist, trace)
    q = q_values(g, tables, None, c)
    ties = q.neighbors[q.q_minus == q.q_plus].tolist()
    return MedianResult(tuple(sorted([u] + ties)), trace.values[-1], trace)
