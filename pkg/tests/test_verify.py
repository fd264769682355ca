import random

import pytest

from gsc.graph import from_edge_list, generate
from gsc.mapping import basic_mapping, mincut_mapping
from gsc.scheduler import AncillaBlock, Schedule, build_blocks, schedule_first_fit, schedule_sweep
from gsc.stabilizer import (
    PauliString,
    ReductionPlan,
    greedy_maximal_independent_set,
    reduce_generators,
    stabilizer_generators,
)
from gsc.verify import (
    check_tableau,
    oracle_min_cut,
    oracle_min_rounds,
    project_generator,
    stabilizer_groups_equal,
    tableau_init,
    verify_compilation,
)


def P3():
    return from_edge_list(3, [(0, 1), (1, 2)])


def p3_plan():
    return reduce_generators(P3(), frozenset({0, 2}))


def test_tableau_init_p3():
    t = tableau_init(p3_plan())
    assert t.row_strings() == ["+XII", "+IZI", "+IIX"]
    check_tableau(t)


def test_tableau_init_all_plus():
    plan = ReductionPlan(
        independent_set=frozenset({0, 1, 2}),
        init_basis=("+", "+", "+"),
        measured=(),
    )
    assert tableau_init(plan).row_strings() == ["+XII", "+IXI", "+IIX"]


def test_tableau_init_single_vertex():
    g = generate("path", 1)
    plan = reduce_generators(g, frozenset({0}))
    assert tableau_init(plan).row_strings() == ["+X"]


def test_project_p3_reaches_target_group():
    t = tableau_init(p3_plan())
    res = project_generator(t, PauliString("ZXZ"))
    assert not res.deterministic
    check_tableau(res.tableau)
    assert stabilizer_groups_equal(res.tableau, stabilizer_generators(P3()))


def test_project_idempotent_when_determined():
    t = tableau_init(p3_plan())
    res = project_generator(t, PauliString("XII"))
    assert res.deterministic and res.sign == 1
    assert res.tableau is t


def test_project_basis_flip():
    plan = ReductionPlan(frozenset({0}), ("+",), ())
    t = tableau_init(plan)
    res = project_generator(t, PauliString("Z"))
    assert not res.deterministic
    assert res.tableau.row_strings() == ["+Z"]


def test_project_rejects_negative_request():
    t = tableau_init(p3_plan())
    with pytest.raises(ValueError):
        project_generator(t, PauliString("ZXZ", sign=-1))


def test_single_qubit_anticommutation_phase():
    # X then Z on one qubit: XZ = -ZX; the phase bookkeeping must see it
    from gsc.verify import _phase_of_product, _word_bits

    x, _ = _word_bits(PauliString("X"))
    _, z = _word_bits(PauliString("Z"))
    forward = _phase_of_product(x, 0 * x, 0 * x, z)
    backward = _phase_of_product(0 * x, z, x, 0 * x)
    assert (forward - backward) % 4 == 2


def test_groups_equal_sign_sensitivity():
    plan_x = ReductionPlan(frozenset({0}), ("+",), ())
    t = tableau_init(plan_x)
    assert stabilizer_groups_equal(t, [PauliString("X")])
    assert not stabilizer_groups_equal(t, [PauliString("Z")])
    assert not stabilizer_groups_equal(t, [PauliString("X", sign=-1)])


def test_groups_equal_presentation_invariance():
    # row-permuted and row-multiplied presentations generate the same group
    g = generate("gnm", 6, m=9, seed=3)
    gens = stabilizer_generators(g)
    plan = reduce_generators(g, greedy_maximal_independent_set(g))
    schedule = schedule_sweep(build_blocks(g, plan.measured, basic_mapping(g, "natural")))
    t = tableau_init(plan)
    for rnd in schedule.rounds:
        for b in rnd:
            t = project_generator(t, gens[b.gen]).tableau
    permuted = list(reversed(gens))
    assert stabilizer_groups_equal(t, permuted)


def test_verify_compilation_p3_pipeline():
    g = P3()
    plan = p3_plan()
    schedule = schedule_sweep(build_blocks(g, plan.measured, basic_mapping(g, "natural")))
    report = verify_compilation(g, plan, schedule)
    assert report.ok
    assert report.checked_generators == 1
    assert report.to_json_dict() == {"pass": True, "checked_generators": 1, "failure": None}


def test_verify_compilation_star50_single_projection():
    g = generate("star", 50)
    plan = reduce_generators(g, greedy_maximal_independent_set(g))
    schedule = schedule_sweep(build_blocks(g, plan.measured, basic_mapping(g, "natural")))
    report = verify_compilation(g, plan, schedule)
    assert report.ok and report.checked_generators == 1


def test_verify_compilation_coverage_mismatch():
    g = P3()
    plan = p3_plan()
    with pytest.raises(ValueError, match="missing"):
        verify_compilation(g, plan, Schedule(rounds=()))


def test_verify_compilation_detects_omitted_generator():
    # plan and schedule both drop one measured generator: projections run,
    # but the final group lacks it and the report names it
    g = generate("complete", 4)
    full = reduce_generators(g, frozenset({0}))
    trimmed = ReductionPlan(
        independent_set=full.independent_set,
        init_basis=full.init_basis,
        measured=full.measured[:-1],
    )
    blocks = build_blocks(g, trimmed.measured, basic_mapping(g, "natural"))
    report = verify_compilation(g, trimmed, schedule_sweep(blocks))
    assert not report.ok
    assert "g3" in report.failure


def test_verify_detects_wrong_projection():
    # projecting the wrong word must not fake the target state
    g = P3()
    plan = p3_plan()
    t = tableau_init(plan)
    t = project_generator(t, PauliString("ZZZ")).tableau
    assert not stabilizer_groups_equal(t, stabilizer_generators(g))


def test_projection_order_independence():
    g = generate("gnm", 8, m=14, seed=9)
    gens = stabilizer_generators(g)
    plan = reduce_generators(g, greedy_maximal_independent_set(g))
    rng = random.Random(4)
    orders = [list(plan.measured)]
    for _ in range(4):
        shuffled = list(plan.measured)
        rng.shuffle(shuffled)
        orders.append(shuffled)
    finals = []
    for order in orders:
        t = tableau_init(plan)
        for i in order:
            t = project_generator(t, gens[i]).tableau
        check_tableau(t)
        finals.append(t)
    for t in finals:
        assert stabilizer_groups_equal(t, gens)


def test_tableau_invariants_after_each_projection():
    g = generate("gnm", 9, m=16, seed=1)
    gens = stabilizer_generators(g)
    plan = reduce_generators(g, greedy_maximal_independent_set(g))
    t = tableau_init(plan)
    for i in plan.measured:
        t = project_generator(t, gens[i]).tableau
        check_tableau(t)


def test_verify_small_grid_all_mappers_schedulers():
    mappers = ["natural", "random", "mincut"]
    schedulers = [schedule_sweep, schedule_first_fit]
    for seed in range(10):
        n = 2 + seed
        total = n * (n - 1) // 2
        g = generate("gnm", n, m=n - 1 + seed % (total - n + 2), seed=seed)
        plan = reduce_generators(g, greedy_maximal_independent_set(g))
        for mapper in mappers:
            mapping = (
                mincut_mapping(g, seed=seed)
                if mapper == "mincut"
                else basic_mapping(g, mapper, seed=seed)
            )
            blocks = build_blocks(g, plan.measured, mapping)
            for fn in schedulers:
                assert verify_compilation(g, plan, fn(blocks)).ok


import numpy as np

I2 = np.eye(2)
X2 = np.array([[0.0, 1.0], [1.0, 0.0]])
Z2 = np.array([[1.0, 0.0], [0.0, -1.0]])
PLUS_VEC = np.array([1.0, 1.0]) / np.sqrt(2)
ZERO_VEC = np.array([1.0, 0.0])


def dense_word(p: PauliString):
    mats = {"I": I2, "X": X2, "Z": Z2, "Y": np.array([[0, -1j], [1j, 0]])}
    out = np.array([[1.0]])
    for c in p.letters:
        out = np.kron(out, mats[c])
    return p.sign * out


def dense_graph_state(g):
    state = np.array([1.0])
    for _ in range(g.n):
        state = np.kron(state, PLUS_VEC)
    for a, b in g.sorted_edges():
        cz = np.ones(1 << g.n)
        for idx in range(1 << g.n):
            if (idx >> (g.n - 1 - a)) & 1 and (idx >> (g.n - 1 - b)) & 1:
                cz[idx] = -1.0
        state = cz * state
    return state


def test_tableau_matches_state_vector_simulation():
    # independent oracle: run the same projections on dense 2^n vectors and
    # compare outcome determinism plus the final state against CZ construction
    rng = random.Random(20)
    for trial in range(25):
        n = 2 + trial % 4
        total = n * (n - 1) // 2
        g = generate("gnm", n, m=rng.randint(n - 1, total), seed=300 + trial)
        gens = stabilizer_generators(g)
        plan = reduce_generators(g, greedy_maximal_independent_set(g))
        state = np.array([1.0])
        for basis in plan.init_basis:
            state = np.kron(state, PLUS_VEC if basis == "+" else ZERO_VEC)
        t = tableau_init(plan)
        for i in plan.measured:
            res = project_generator(t, gens[i])
            t = res.tableau
            projected = 0.5 * (state + dense_word(gens[i]) @ state)
            norm2 = float(np.real(projected @ projected.conj()))
            if res.deterministic:
                assert norm2 == pytest.approx(1.0 if res.sign == 1 else 0.0, abs=1e-9)
            else:
                assert norm2 == pytest.approx(0.5, abs=1e-9)
            state = projected / np.sqrt(norm2)
        target = dense_graph_state(g)
        overlap = abs(np.vdot(target, state))
        assert overlap == pytest.approx(1.0, abs=1e-9)
        assert stabilizer_groups_equal(t, gens)


def test_oracle_min_rounds():
    mk = lambda pairs: [AncillaBlock(i, l, r) for i, (l, r) in enumerate(pairs)]
    assert oracle_min_rounds([]) == 0
    assert oracle_min_rounds(mk([(1, 4), (4, 6), (7, 8), (5, 9)])) == 2
    assert oracle_min_rounds(mk([(0, 3)] * 3)) == 3
    with pytest.raises(ValueError):
        oracle_min_rounds(mk([(0, 1)] * 13))


def test_oracle_min_rounds_matches_first_fit():
    rng = random.Random(3)
    for _ in range(120):
        count = rng.randrange(0, 13)
        blocks = []
        for i in range(count):
            l = rng.randrange(25)
            blocks.append(AncillaBlock(i, l, l + rng.randrange(1, 8)))
        assert oracle_min_rounds(blocks) == schedule_first_fit(blocks).tocks


def test_oracle_min_cut_values():
    assert oracle_min_cut(P3()) == 1
    assert oracle_min_cut(generate("complete", 4)) == 3
    c5 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert oracle_min_cut(c5) == 2
    with pytest.raises(ValueError):
        oracle_min_cut(generate("path", 1))
    with pytest.raises(ValueError):
        oracle_min_cut(generate("path", 13))


def test_oracle_min_cut_k4_bipartition_count():
    # sanity on the enumeration: 7 bipartitions of 4 vertices, all cuts >= 3
    g = generate("complete", 4)
    cuts = []
    for mask in range(1, 1 << 3):
        cut = 0
        for a, b in g.edges:
            sa = a != 0 and (mask >> (a - 1)) & 1
            sb = b != 0 and (mask >> (b - 1)) & 1
            cut += sa != sb
        cuts.append(cut)
    assert len(cuts) == 7
    assert min(cuts) == 3 == oracle_min_cut(g)
