"""End-to-end pipeline: reduce generators, map vertices, schedule, verify, cost.

Cost model: every multi-patch parity measurement costs 1 Tock, so the Tock
count equals the number of schedule rounds (initialization and single-patch
measurement are free). The full 2-row layout uses 4n tiles; qubits
initialized in |+> never join a measurement in the X basis and shrink to
one tile, leaving 4n - |independent set| tiles. Space-time volume is
reduced tiles times Tocks.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, replace
from typing import NamedTuple

from .graph import Graph, graph_stats, is_connected
from .mapping import (
    AUTO,
    DEFAULT_CONTRACTION_BUDGET,
    Mapping,
    basic_mapping,
    mincut_mapping,
)
from .scheduler import SCHEDULERS, Schedule, build_blocks, validate_schedule
from .stabilizer import ReductionPlan, greedy_maximal_independent_set, reduce_generators
from .verify import verify_compilation

DEFAULT_VERIFY_CAP = 200


class DisconnectedGraphError(ValueError):
    """Input graph is not connected; the pipeline only handles one component."""


class VerificationError(RuntimeError):
    """A compiled schedule failed self-validation; never emit it silently."""


@dataclass(frozen=True)
class CompileOptions:
    mapper: str = "mincut"
    scheduler: str = "paper"
    seed: int = 0
    karger_reps: int | str = AUTO
    karger_budget: int = DEFAULT_CONTRACTION_BUDGET
    verify: str = "auto"  # auto | always | never
    verify_cap: int = DEFAULT_VERIFY_CAP
    mis_order: str = "degree_ascending"


@dataclass(frozen=True)
class CompilationResult:
    n: int
    plan: ReductionPlan
    mapping: Mapping
    schedule: Schedule
    tocks: int
    tiles_full: int
    tiles_reduced: int
    spacetime_volume: int
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "plan": self.plan.to_json_dict(),
            "mapping": list(self.mapping.pos),
            "schedule": self.schedule.to_json_dict(),
            "tocks": self.tocks,
            "tiles_full": self.tiles_full,
            "tiles_reduced": self.tiles_reduced,
            "spacetime_volume": self.spacetime_volume,
            "verified": self.verified,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CompilationResult":
        return cls(
            n=obj["n"],
            plan=ReductionPlan.from_json_dict(obj["plan"]),
            mapping=Mapping(pos=tuple(obj["mapping"])),
            schedule=Schedule.from_json_dict(obj["schedule"]),
            tocks=obj["tocks"],
            tiles_full=obj["tiles_full"],
            tiles_reduced=obj["tiles_reduced"],
            spacetime_volume=obj["spacetime_volume"],
            verified=obj["verified"],
        )


def space_tiles(n: int, mis_size: int, layout: str = "reduced") -> int:
    """Tile count of the 2-row layout: 4n full, 4n - mis_size reduced."""
    if not (0 <= mis_size <= n):
        raise ValueError(f"independent-set size {mis_size} outside [0, {n}]")
    if layout == "full":
        return 4 * n
    if layout == "reduced":
        return 4 * n - mis_size
    raise ValueError(f"unknown layout {layout!r}")


def spacetime_volume(result: CompilationResult) -> int:
    return result.tiles_reduced * result.tocks


def compile_graph(g: Graph, options: CompileOptions | None = None, **overrides) -> CompilationResult:
    """Run the three-phase pipeline and return the costed, validated result.

    Deterministic for fixed options. Raises DisconnectedGraphError on
    disconnected input and VerificationError if the produced schedule fails
    its own validation or the tableau check (within the verification cap).
    """
    opts = replace(options or CompileOptions(), **overrides)
    if not is_connected(g):
        raise DisconnectedGraphError(f"input graph with {g.n} vertices is not connected")
    independent = greedy_maximal_independent_set(g, order=opts.mis_order, seed=opts.seed)
    plan = reduce_generators(g, independent)
    if opts.mapper == "mincut":
        mapping = mincut_mapping(
            g,
            repetitions_per_cut=opts.karger_reps,
            seed=opts.seed,
            contraction_budget=opts.karger_budget,
        )
    else:
        mapping = basic_mapping(g, kind=opts.mapper, seed=opts.seed)
    blocks = build_blocks(g, plan.measured, mapping)
    try:
        schedule_fn = SCHEDULERS[opts.scheduler]
    except KeyError:
        raise ValueError(f"unknown scheduler {opts.scheduler!r}") from None
    schedule = schedule_fn(blocks)
    report = validate_schedule(schedule, blocks)
    if not report.ok:
        raise VerificationError(
            "scheduler produced an invalid schedule: " + "; ".join(report.violations)
        )
    verified = False
    if opts.verify == "always" or (opts.verify == "auto" and g.n <= opts.verify_cap):
        vr = verify_compilation(g, plan, schedule)
        if not vr.ok:
            raise VerificationError(f"compiled procedure failed verification: {vr.failure}")
        verified = True
    elif opts.verify not in ("auto", "never"):
        raise ValueError(f"unknown verify mode {opts.verify!r}")
    mis_size = len(independent)
    tocks = schedule.tocks
    tiles_reduced = space_tiles(g.n, mis_size, "reduced")
    return CompilationResult(
        n=g.n,
        plan=plan,
        mapping=mapping,
        schedule=schedule,
        tocks=tocks,
        tiles_full=space_tiles(g.n, mis_size, "full"),
        tiles_reduced=tiles_reduced,
        spacetime_volume=tiles_reduced * tocks,
        verified=verified,
    )


# ---------------------------------------------------------------------------
# CZ baseline: proper edge coloring, one color class per CZ layer


class CzBaseline(NamedTuple):
    colors: int
    tocks: int


def _bipartition(g: Graph) -> list[int] | None:
    """Two-color the vertices, or None if an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] == -1:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


class _ColorState:
    """Partial proper edge coloring with per-vertex color -> partner maps."""

    def __init__(self, n: int):
        self.at: list[dict[int, int]] = [dict() for _ in range(n)]
        self.color: dict[tuple[int, int], int] = {}

    def free(self, v: int, limit: int) -> int:
        for c in range(limit):
            if c not in self.at[v]:
                return c
        raise AssertionError("palette exhausted")

    def put(self, u: int, v: int, c: int) -> None:
        self.color[(min(u, v), max(u, v))] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def drop(self, u: int, v: int) -> int:
        c = self.color.pop((min(u, v), max(u, v)))
        del self.at[u][c]
        del self.at[v][c]
        return c


def _color_bipartite(g: Graph, delta: int) -> dict[tuple[int, int], int]:
    """Exact delta-coloring of a bipartite graph via alternating-path flips."""
    st = _ColorState(g.n)
    for u, v in g.sorted_edges():
        a = st.free(u, delta)
        b = st.free(v, delta)
        if a == b:
            st.put(u, v, a)
            continue
        # flip the maximal path from v alternating colors a, b; in a
        # bipartite graph it cannot reach u, so a becomes free at both ends
        prev, cur, want = v, st.at[v].get(a, -1), a
        chain = []
        while cur != -1:
            chain.append((prev, cur))
            want = b if want == a else a
            prev, cur = cur, st.at[cur].get(want, -1)
        for x, y in chain:
            st.drop(x, y)
        for i, (x, y) in enumerate(chain):
            st.put(x, y, b if i % 2 == 0 else a)
        st.put(u, v, a)
    return st.color


def _color_complete(g: Graph) -> dict[tuple[int, int], int]:
    """Round-robin coloring of a complete graph: n-1 colors for even n, n for odd."""
    n = g.n
    color = {}
    if n % 2 == 0:
        for a in range(n):
            for b in range(a + 1, n):
                color[(a, b)] = (2 * a) % (n - 1) if b == n - 1 else (a + b) % (n - 1)
    else:
        for a in range(n):
            for b in range(a + 1, n):
                color[(a, b)] = (a + b) % n
    return color


def _color_fan_recoloring(g: Graph, delta: int) -> dict[tuple[int, int], int]:
    """General graphs: fan rotation plus alternating-path inversion, at most
    delta + 1 colors (Vizing bound)."""
    st = _ColorState(g.n)
    palette = delta + 1
    for u, v in g.sorted_edges():
        fan = [v]
        in_fan = {v}
        while True:
            d = st.free(fan[-1], palette)
            w = st.at[u].get(d, -1)
            if w == -1 or w in in_fan:
                break
            fan.append(w)
            in_fan.add(w)
        c = st.free(u, palette)
        d = st.free(fan[-1], palette)
        if d in st.at[u]:
            # invert the maximal path from u alternating colors d, c
            prev, cur, want = u, st.at[u][d], d
            chain = []
            while cur != -1:
                chain.append((prev, cur))
                want = c if want == d else d
                prev, cur = cur, st.at[cur].get(want, -1)
            for x, y in chain:
                st.drop(x, y)
            for i, (x, y) in enumerate(chain):
                st.put(x, y, c if i % 2 == 0 else d)
        for j, w in enumerate(fan):
            if d not in st.at[w]:
                fan = fan[: j + 1]
                break
        for i in range(len(fan) - 1):
            ci = st.drop(u, fan[i + 1])
            st.put(u, fan[i], ci)
        st.put(u, fan[-1], d)
    return st.color


def edge_coloring(g: Graph) -> dict[tuple[int, int], int]:
    """Proper edge coloring with the fewest colors cheaply attainable.

    Bipartite graphs get an exact max-degree coloring, complete graphs the
    exact round-robin construction; anything else falls back to the
    fan-recoloring bound of max degree + 1.
    """
    stats = graph_stats(g)
    if stats.edge_count == 0:
        return {}
    if g.edge_count == g.n * (g.n - 1) // 2 and g.n >= 3:
        return _color_complete(g)
    if _bipartition(g) is not None:
        return _color_bipartite(g, stats.max_degree)
    return _color_fan_recoloring(g, stats.max_degree)


def cz_baseline_depth(g: Graph) -> CzBaseline:
    """Layer count for entangling-gate preparation: one CZ layer per color
    class, two two-party parity checks (Tocks) per layer."""
    coloring = edge_coloring(g)
    colors = len(set(coloring.values()))
    return CzBaseline(colors=colors, tocks=2 * colors)
