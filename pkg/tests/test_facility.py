import math

import numpy as np
import pytest

from helly import CostFn, apsp_summary, find_center, find_medians
from helly.errors import GateNotFoundError, StepBudgetExceededError
from helly.facility import center_step, median_step, sample_start, step_budget
from helly.generators import gen_interval, gen_tree

from helpers import cycle, floyd_warshall, helly_corpus, path, star


def costs(*xs):
    return CostFn(np.array(xs, dtype=np.int64))


def test_p4_center_steps():
    assert center_step(path(4), None, 0) == 1
    assert center_step(path(4), None, 1) is None


def test_p4_center():
    v, val, _ = find_center(path(4))
    assert v in (1, 2) and val == 2


def test_weighted_center():
    v, val, _ = find_center(path(4), costs(5, 1, 1, 1))
    assert (v, val) == (0, 3)


def test_p4_median_steps():
    assert median_step(path(4), None, 0) == 1
    assert median_step(path(4), None, 1) is None


def test_star_leaf_moves_to_hub():
    assert median_step(star(5), None, 3) == 0


def test_p4_medians():
    vs, val, _ = find_medians(path(4))
    assert (vs, val) == ((1, 2), 4)
    vs, val, _ = find_medians(path(4), costs(0, 0, 0, 1))
    assert (vs, val) == ((3,), 0)


def test_single_vertex():
    g = path(1)
    assert sample_start(g, None, "eccentricity", 5)[0] == 0
    assert find_center(g)[:2] == (0, 0)
    assert find_medians(g)[:2] == ((0,), 0)


def test_full_sample_hits_global_minimum():
    g = gen_tree(60, 4)
    ecc = floyd_warshall(g).max(axis=1)
    v, tr = sample_start(g, None, "eccentricity", 0, p=1.0)
    assert ecc[v] == ecc.min() and tr.sample_size == 60


def test_sample_size_concentrates():
    g = gen_tree(400, 0)
    sizes = [sample_start(g, None, "eccentricity", s)[1].sample_size for s in range(1000)]
    assert abs(np.mean(sizes) - 20) <= 3 * 20


@pytest.mark.parametrize("seed", range(6))
def test_center_step_matches_neighbour_scan(seed):
    g = gen_interval(35, seed)
    c = CostFn(np.random.default_rng(seed).integers(1, 9, size=g.n))
    D = floyd_warshall(g)
    ecc = (D * c.costs[None, :]).max(axis=1)
    for u in range(g.n):
        better = [int(v) for v in g.neighbors(u) if ecc[v] < ecc[u]]
        assert center_step(g, c, u) == (better[0] if better else None)
        td = D @ c.costs
        better = [int(v) for v in g.neighbors(u) if td[v] < td[u]]
        assert median_step(g, c, u) == (better[0] if better else None)


def test_trace_strictly_decreases():
    for _, g in helly_corpus()[::15]:
        for fn in (find_center, find_medians):
            tr = fn(g, None, 3).trace
            assert all(a > b for a, b in zip(tr.values, tr.values[1:]))
            assert tr.steps == len(tr.vertices) - 1
            assert tr.bfs_count >= tr.sample_size


def test_zero_costs():
    g = cycle(5)
    z = CostFn(np.zeros(5, dtype=np.int64))
    assert find_center(g, z)[:2] == (0, 0)
    assert find_medians(g, z)[:2] == (tuple(range(5)), 0)


def test_step_budget():
    assert step_budget(100) == math.ceil(10 * 10 * math.log(100))
    g = path(40)
    with pytest.raises(StepBudgetExceededError):
        find_center(g, None, seed=0, max_steps=0, p=1 / 40)
    # p tiny forces a single uniform start, far from the middle for this seed
    assert find_center(g, None, seed=0, p=1e-9).value == 20


def test_non_helly_input_is_reported():
    with pytest.raises(GateNotFoundError):
        find_center(cycle(4), None, 0, p=1.0)


def test_zero_costs_break_median_clique():
    # TD_c on P4 with costs (1,0,1,0) is (2,2,2,4): the three medians do not form a clique
    c = costs(1, 0, 1, 0)
    s = apsp_summary(path(4), c)
    assert tuple(s.median) == (0, 1, 2)
    assert not path(4).has_edge(0, 2)
    # the neighbourhood sweep only sees the whole set when the descent ends at vertex 1
    found = {find_medians(path(4), c, seed, p=1e-9).vertices for seed in range(8)}
    assert (0, 1) in found and (0, 1, 2) in found


@pytest.mark.parametrize("seed", range(4))
def test_corpus_sample_against_oracle(seed):
    rng = np.random.default_rng(seed)
    for _, g in helly_corpus()[seed::40]:
        c = CostFn(rng.integers(1, 50, size=g.n))
        s = apsp_summary(g, c)
        assert find_center(g, c, seed).value == s.radius
        assert find_medians(g, c, seed).vertices == tuple(s.median)
