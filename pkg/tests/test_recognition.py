import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helly import (
    apsp_summary, check_unimodal, check_witness, from_edge_list, is_k_alpha_helly, is_k_helly,
)
from helly.errors import InputError, InstanceTooLargeError
from helly.generators import gen_tree

from helpers import cycle, floyd_warshall, helly_by_definition, path, random_connected, small_corpus


def test_c4_not_helly_with_witness():
    rep = is_k_helly(cycle(4), 2)
    assert not rep.holds
    assert len(rep.witness) == 3
    assert check_witness(cycle(4), rep)


@pytest.mark.parametrize("seed", range(10))
def test_trees_are_helly(seed):
    assert is_k_helly(gen_tree(8 + 4 * seed, seed), 2).holds


def test_c4_higher_k():
    # regression values from the exhaustive check, confirmed by the ball-family definition
    assert not is_k_helly(cycle(4), 3).holds
    assert is_k_helly(cycle(4), 4).holds


def test_c4_alpha_one():
    assert is_k_alpha_helly(cycle(4), 2, 1).holds


def test_alpha_at_diameter_always_holds():
    for n in (5, 6, 7, 9):
        g = cycle(n)
        assert is_k_alpha_helly(g, 2, n // 2).holds


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
def test_matches_definition_on_tiny_graphs(n, seed, k):
    g = random_connected(np.random.default_rng(seed), n, 0.3)
    assert is_k_helly(g, k).holds == helly_by_definition(g, k)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2**32 - 1))
def test_monotone_in_k_and_alpha(n, seed):
    g = random_connected(np.random.default_rng(seed), n, 0.25)
    ks = [is_k_helly(g, k).holds for k in (2, 3, 4)]
    assert ks == sorted(ks)
    alphas = [is_k_alpha_helly(g, 2, a).holds for a in range(4)]
    assert alphas == sorted(alphas)
    rep = is_k_helly(g, 2)
    if not rep.holds:
        assert check_witness(g, rep)


def test_check_witness_rejects_tampering():
    rep = is_k_helly(cycle(4), 2)
    from dataclasses import replace

    assert not check_witness(cycle(4), replace(rep, radii=tuple(r + 1 for r in rep.radii)))
    assert not check_witness(cycle(4), replace(rep, witness=(0, 1)))
    assert not check_witness(path(3), is_k_helly(path(3), 2))


def test_budget_guard():
    with pytest.raises(InstanceTooLargeError, match="too large"):
        is_k_helly(path(61), 2)
    with pytest.raises(InstanceTooLargeError):
        is_k_helly(path(29), 3)
    assert is_k_helly(path(29), 3, max_work=29 ** 6).holds
    with pytest.raises(InputError):
        is_k_helly(path(3), 1)


def test_unimodal_constant_on_c6():
    g = cycle(6)
    e = apsp_summary(g).ecc
    assert check_unimodal(g, e).ok


def _first_non_unimodal():
    for n in range(1, 8):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            seen, stack = {0}, [0]
            while stack:
                u = stack.pop()
                for a, b in edges:
                    for x, y in ((a, b), (b, a)):
                        if x == u and y not in seen:
                            seen.add(y)
                            stack.append(y)
            if len(seen) < n:
                continue
            g = from_edge_list(n, edges)
            e = floyd_warshall(g).max(axis=1)
            for v in range(n):
                nb = [y for a, b in edges for x, y in ((a, b), (b, a)) if x == v]
                if all(e[v] <= e[u] for u in nb) and e[v] > e.min():
                    return g, mask, v
    return None


def test_first_non_unimodal_graph():
    g, mask, v = _first_non_unimodal()
    assert (g.n, mask, v) == (7, 2922, 4)  # frozen from the enumeration above
    chk = check_unimodal(g, floyd_warshall(g).max(axis=1))
    assert not chk.ok and chk.vertex == 4


def test_unimodal_length_checked():
    with pytest.raises(InputError):
        check_unimodal(path(3), [1, 2])


def test_helly_radius_is_half_diameter():
    for fam, g in small_corpus(40)[:60]:
        if is_k_helly(g, 2).holds:
            s = apsp_summary(g)
            assert s.radius == -(-s.diameter // 2), fam
