import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsc.compiler import (
    CompilationResult,
    CompileOptions,
    DisconnectedGraphError,
    compile_graph,
    cz_baseline_depth,
    edge_coloring,
    space_tiles,
    spacetime_volume,
)
from gsc.graph import from_edge_list, generate, graph_stats


def test_compile_path_100_mincut():
    r = compile_graph(generate("path", 100), mapper="mincut")
    assert r.tocks == 2
    assert r.verified


def test_compile_star_100():
    r = compile_graph(generate("star", 100), mapper="natural")
    assert r.tocks == 1
    assert r.tiles_full == 400
    assert r.tiles_reduced == 301
    assert r.spacetime_volume == 301


def test_compile_complete_100():
    r = compile_graph(generate("complete", 100), mapper="natural")
    assert r.tocks == 99
    assert len(r.plan.measured) == 99


def test_compile_single_vertex():
    r = compile_graph(generate("path", 1), mapper="natural")
    assert r.tocks == 0
    assert r.tiles_reduced == 3
    assert r.spacetime_volume == 0


def test_compile_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        compile_graph(from_edge_list(4, [(0, 1), (2, 3)]))


def test_compile_rejects_unknown_options():
    g = generate("path", 5)
    with pytest.raises(ValueError):
        compile_graph(g, scheduler="nope")
    with pytest.raises(ValueError):
        compile_graph(g, mapper="nope")
    with pytest.raises(ValueError):
        compile_graph(g, verify="nope")


def test_compile_verify_modes():
    g = generate("gnm", 30, m=60, seed=1)
    assert compile_graph(g, mapper="random", verify="always").verified
    assert not compile_graph(g, mapper="random", verify="never").verified
    # auto skips above the cap
    opts = CompileOptions(mapper="random", verify="auto", verify_cap=10)
    assert not compile_graph(g, opts).verified


def test_compile_tocks_between_bounds():
    for seed in range(20):
        n = 4 + seed
        total = n * (n - 1) // 2
        g = generate("gnm", n, m=n - 1 + seed % (total - n + 2), seed=seed)
        for mapper in ("natural", "random", "mincut"):
            for scheduler in ("paper", "first-fit"):
                r = compile_graph(g, mapper=mapper, scheduler=scheduler, seed=seed)
                measured = len(r.plan.measured)
                assert r.tocks <= measured == n - len(r.plan.independent_set)
                assert r.tocks >= r.schedule.to_json_dict()["lower_bound"]


def test_space_tiles():
    assert space_tiles(100, 50, "full") == 400
    assert space_tiles(100, 50, "reduced") == 350
    assert space_tiles(1, 1, "reduced") == 3
    with pytest.raises(ValueError):
        space_tiles(10, 11)
    with pytest.raises(ValueError):
        space_tiles(10, 3, "weird")


def test_spacetime_volume_composition():
    star = compile_graph(generate("star", 100), mapper="natural")
    assert spacetime_volume(star) == 301 * 1 == star.spacetime_volume
    k4 = compile_graph(generate("complete", 4), mapper="natural")
    assert spacetime_volume(k4) == (16 - 1) * 3 == 45


def test_result_json_round_trip_and_determinism():
    g = generate("gnm", 12, m=20, seed=5)
    a = compile_graph(g, mapper="mincut", seed=3)
    b = compile_graph(g, mapper="mincut", seed=3)
    assert a.to_json_text() == b.to_json_text()
    restored = CompilationResult.from_json_dict(a.to_json_dict())
    assert restored == a


def proper(g, coloring):
    for v in range(g.n):
        seen = set()
        for w in g.adj[v]:
            c = coloring[(min(v, w), max(v, w))]
            if c in seen:
                return False
            seen.add(c)
    return True


def test_cz_baseline_families():
    assert cz_baseline_depth(generate("path", 10)) == (2, 4)
    assert cz_baseline_depth(generate("path", 3)).colors == 2
    for n in (5, 10, 50):
        assert cz_baseline_depth(generate("star", n)).colors == n - 1
    # complete graphs: chromatic index n-1 for even n, n for odd n
    for n in range(3, 14):
        want = n - 1 if n % 2 == 0 else n
        assert cz_baseline_depth(generate("complete", n)).colors == want


def test_cz_baseline_trees_hit_max_degree():
    for seed in range(40):
        t = generate("random_tree", 60, seed=seed)
        assert cz_baseline_depth(t).colors == graph_stats(t).max_degree


def test_edge_coloring_proper_and_bounded():
    for seed in range(40):
        n = 4 + seed % 12
        total = n * (n - 1) // 2
        g = generate("gnm", n, m=n - 1 + (seed * 7) % (total - n + 2), seed=seed)
        coloring = edge_coloring(g)
        assert proper(g, coloring)
        assert len(set(coloring.values())) <= graph_stats(g).max_degree + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 24), st.integers(0, 10_000))
def test_edge_coloring_property(n, seed):
    total = n * (n - 1) // 2
    g = generate("gnm", n, m=n - 1 + seed % (total - n + 2), seed=seed)
    coloring = edge_coloring(g)
    assert set(coloring) == g.edges
    assert proper(g, coloring)
    assert len(set(coloring.values())) <= graph_stats(g).max_degree + 1


def test_edge_coloring_edgeless():
    assert edge_coloring(generate("path", 1)) == {}
    assert cz_baseline_depth(generate("path", 1)) == (0, 0)


def test_cz_tocks_double_colors():
    g = generate("gnm", 20, m=50, seed=2)
    baseline = cz_baseline_depth(g)
    assert baseline.tocks == 2 * baseline.colors
