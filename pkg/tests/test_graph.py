import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helly import CostFn, ball, bfs, eccentricity, from_edge_list, total_distance
from helly.errors import InputError, NotConnectedError, OutOfRangeError
from helly.generators import gen_king_grid

from helpers import floyd_warshall, path, random_connected, star


def test_single_edge():
    g = from_edge_list(2, [(0, 1)])
    assert (g.n, g.m) == (2, 1)


def test_path_p4_canonical():
    g = from_edge_list(4, [(2, 3), (0, 1), (1, 2), (1, 0)])
    assert g.m == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1).tolist() == [0, 2]


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError, match="not connected"):
        from_edge_list(3, [(0, 1)])


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(InputError):
        from_edge_list(3, edges + [(0, 1), (1, 2)])


def test_arrays_read_only():
    g = path(3)
    with pytest.raises(ValueError):
        g.indices[0] = 2


def test_bfs_examples(backend):
    assert bfs(path(4), 0).tolist() == [0, 1, 2, 3]
    assert bfs(star(3), 0).tolist() == [0, 1, 1, 1]


def test_bfs_king_grid_matches_floyd_warshall(backend):
    g = gen_king_grid(3, 3)
    D = floyd_warshall(g)
    for s in range(g.n):
        assert bfs(g, s).tolist() == D[s].tolist()
    assert bfs(g, 0).max() <= 2


def test_ball_examples(backend):
    p4 = path(4)
    for v in range(4):
        assert set(ball(p4, v, 0)) == {v}
    assert set(ball(p4, 1, 1)) == {0, 1, 2}
    assert set(ball(p4, 0, 3)) == {0, 1, 2, 3}


def test_eccentricity_examples():
    p4 = path(4)
    assert eccentricity(p4, None, 1) == 2
    c = CostFn([5, 1, 1, 1])
    assert eccentricity(p4, c, 0) == 3
    assert eccentricity(p4, c, 1) == 5
    assert all(eccentricity(p4, [0, 0, 0, 0], v) == 0 for v in range(4))


def test_total_distance_examples():
    assert total_distance(path(4), None, 1) == 4
    s = star(3)
    assert total_distance(s, None, 0) == 3
    assert total_distance(s, None, 1) == 5
    assert total_distance(path(4), [0, 0, 0, 1], 0) == 3


def test_cost_validation():
    with pytest.raises(InputError):
        CostFn([1, -1])
    with pytest.raises(InputError):
        CostFn([1.5, 2])
    with pytest.raises(InputError):
        eccentricity(path(3), [1, 1], 0)


def test_total_distance_overflow_rejected():
    g = path(4)
    big = 2**62
    with pytest.raises(OutOfRangeError):
        total_distance(g, [big, 1, 1, 1], 3)
    # just inside the range still works exactly
    ok = (2**63 - 1) // 12
    assert total_distance(g, [ok, 0, 0, 0], 3) == 3 * ok


@st.composite
def graphs(draw, max_n=25):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    extra = draw(st.sampled_from([0.0, 0.05, 0.2, 0.5]))
    return random_connected(np.random.default_rng(seed), n, extra)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_bfs_properties(g):
    D = floyd_warshall(g)
    for s in range(g.n):
        row = bfs(g, s)
        assert row.tolist() == D[s].tolist()
        assert row[s] == 0 and row.max() < g.n
        # adjacent vertices differ by at most one in every distance row
        for u, v in g.edges():
            assert abs(int(row[u]) - int(row[v])) <= 1
        assert eccentricity(g, None, s) == row.max()
        assert total_distance(g, None, s) == row.sum()


@settings(max_examples=40, deadline=None)
@given(graphs(), st.data())
def test_ball_nesting(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    r = data.draw(st.integers(0, g.n))
    assert ball(g, v, r).issubset(ball(g, v, r + 1))
    assert len(ball(g, v, g.n - 1)) == g.n
