import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsc.graph import from_edge_list, generate
from gsc.mapping import (
    Mapping,
    auto_repetitions,
    basic_mapping,
    karger_min_cut,
    mincut_mapping,
)
from gsc.scheduler import build_blocks, schedule_sweep
from gsc.stabilizer import greedy_maximal_independent_set, reduce_generators


def brute_force_min_cut(g):
    """Independent reference: minimum over all nontrivial bipartitions."""
    best = g.edge_count + 1
    for mask in range(1, 1 << (g.n - 1)):
        cut = 0
        for a, b in g.edges:
            sa = a != 0 and (mask >> (a - 1)) & 1
            sb = b != 0 and (mask >> (b - 1)) & 1
            if sa != sb:
                cut += 1
        best = min(best, cut)
    return best


def P3():
    return from_edge_list(3, [(0, 1), (1, 2)])


def test_basic_mapping_natural():
    assert basic_mapping(P3(), "natural").pos == (0, 1, 2)


def test_basic_mapping_random_deterministic_bijection():
    g = generate("complete", 4)
    a = basic_mapping(g, "random", seed=3)
    b = basic_mapping(g, "random", seed=3)
    assert a == b
    assert sorted(a.pos) == [0, 1, 2, 3]


def test_mapping_rejects_non_bijection():
    with pytest.raises(ValueError):
        Mapping(pos=(0, 0, 2))


def test_karger_two_vertices():
    g = from_edge_list(2, [(0, 1)])
    cut = karger_min_cut(g, repetitions=3, seed=0)
    assert cut.cut_size == 1
    assert cut.cut_edges == {(0, 1)}
    assert sorted(map(sorted, cut.sides)) == [[0], [1]]


def test_karger_p3_bridge():
    cut = karger_min_cut(P3(), repetitions=4, seed=0)
    assert cut.cut_size == 1
    assert cut.cut_edges <= {(0, 1), (1, 2)}
    assert set(cut.sides[0]) | set(cut.sides[1]) == {0, 1, 2}


def test_karger_k4():
    g = generate("complete", 4)
    cut = karger_min_cut(g, repetitions=32, seed=1)
    assert cut.cut_size == 3 == brute_force_min_cut(g)


def test_karger_triangle_and_cycle():
    k3 = generate("complete", 3)
    assert karger_min_cut(k3, repetitions=16, seed=0).cut_size == 2
    c5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert karger_min_cut(c5, repetitions=64, seed=0).cut_size == 2


def test_karger_preconditions():
    with pytest.raises(ValueError):
        karger_min_cut(generate("path", 1), repetitions=1)
    with pytest.raises(ValueError):
        karger_min_cut(P3(), repetitions=0)
    with pytest.raises(ValueError):
        karger_min_cut(from_edge_list(3, [(0, 1)]), repetitions=1)


def test_karger_never_below_exact():
    for seed in range(60):
        n = 4 + seed % 6
        total = n * (n - 1) // 2
        g = generate("gnm", n, m=n - 1 + seed % (total - n + 2), seed=seed)
        got = karger_min_cut(g, repetitions=3, seed=seed).cut_size
        assert got >= brute_force_min_cut(g)


def test_karger_cut_edges_cross_sides():
    g = generate("gnm", 10, m=20, seed=5)
    cut = karger_min_cut(g, repetitions=50, seed=5)
    a, b = cut.sides
    for x, y in cut.cut_edges:
        assert (x in a) != (y in a)
    # removing the cut edges disconnects the two sides
    rest = g.edges - cut.cut_edges
    for x, y in rest:
        assert (x in a) == (y in a)


def test_auto_repetitions():
    assert auto_repetitions(2) == 1
    assert auto_repetitions(10) == math.ceil(100 * math.log(10))
    # budget-capped for large components
    assert auto_repetitions(300, contraction_budget=100_000) == 100_000 // 298


def schedule_depth(g, mapping):
    plan = reduce_generators(g, greedy_maximal_independent_set(g))
    return schedule_sweep(build_blocks(g, plan.measured, mapping)).tocks


def test_mincut_mapping_p3_achieves_minimum_depth():
    g = P3()
    got = schedule_depth(g, mincut_mapping(g, seed=0))
    best = min(schedule_depth(g, Mapping(pos=perm)) for perm in itertools.permutations(range(3)))
    assert got == best


def test_mincut_mapping_star_depth_one():
    g = generate("star", 30)
    assert schedule_depth(g, mincut_mapping(g, seed=2)) == 1


def test_mincut_mapping_path_depth_two():
    for n in (10, 100):
        g = generate("path", n)
        assert schedule_depth(g, mincut_mapping(g, seed=0)) == 2


def test_mincut_mapping_path_contiguous_sides():
    # every cut of a path splits an interval, so placed vertices must form
    # a monotone run; with right-to-left filling this is reversed identity
    g = generate("path", 50)
    m = mincut_mapping(g, seed=8)
    order = m.row_order()
    assert order == sorted(order, reverse=False) or order == sorted(order, reverse=True)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 18), st.integers(0, 10_000))
def test_mincut_mapping_always_bijection(n, seed):
    total = n * (n - 1) // 2
    g = generate("gnm", n, m=n - 1 + seed % (total - n + 2), seed=seed)
    m = mincut_mapping(g, seed=seed)
    assert sorted(m.pos) == list(range(n))


def test_mincut_mapping_deterministic():
    g = generate("gnm", 24, m=60, seed=6)
    assert mincut_mapping(g, seed=11) == mincut_mapping(g, seed=11)


def test_mincut_mapping_explicit_repetitions():
    g = generate("gnm", 12, m=24, seed=1)
    m = mincut_mapping(g, repetitions_per_cut=5, seed=1)
    assert sorted(m.pos) == list(range(12))


def test_mincut_mapping_requires_connected():
    with pytest.raises(ValueError):
        mincut_mapping(from_edge_list(4, [(0, 1), (2, 3)]))
