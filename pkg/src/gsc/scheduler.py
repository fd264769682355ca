"""Pack parity-check ancilla intervals into measurement rounds.

Each generator still to be measured occupies a contiguous bus segment
[L, R] covering the mapped positions of its vertex and neighborhood. Two
measurements can share a round only if their segments are strictly
disjoint (touching at a position conflicts). Round count is the Tock cost.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Graph
from .mapping import Mapping


class AncillaBlock(NamedTuple):
    gen: int
    L: int
    R: int


@dataclass(frozen=True)
class Schedule:
    """Ordered rounds; blocks within a round are pairwise disjoint."""

    rounds: tuple[tuple[AncillaBlock, ...], ...]

    @property
    def tocks(self) -> int:
        return len(self.rounds)

    def all_blocks(self) -> list[AncillaBlock]:
        return [b for rnd in self.rounds for b in rnd]

    def to_json_dict(self, lower_bound: int | None = None) -> dict:
        if lower_bound is None:
            lower_bound = depth_lower_bound(self.all_blocks())
        return {
            "rounds": [[{"gen": b.gen, "L": b.L, "R": b.R} for b in rnd] for rnd in self.rounds],
            "tocks": self.tocks,
            "lower_bound": lower_bound,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Schedule":
        rounds = tuple(
            tuple(AncillaBlock(gen=b["gen"], L=b["L"], R=b["R"]) for b in rnd)
            for rnd in obj["rounds"]
        )
        return cls(rounds=rounds)


def build_blocks(g: Graph, measured, mapping: Mapping) -> list[AncillaBlock]:
    """Ancilla interval per measured generator: min/max mapped position of
    the generator's vertex together with its neighborhood."""
    if mapping.n != g.n:
        raise ValueError(f"mapping covers {mapping.n} vertices, graph has {g.n}")
    pos = mapping.pos
    blocks = []
    for i in measured:
        if not (0 <= i < g.n):
            raise ValueError(f"generator index {i} out of range")
        lo = hi = pos[i]
        for w in g.adj[i]:
            p = pos[w]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
        blocks.append(AncillaBlock(gen=i, L=lo, R=hi))
    return blocks


def schedule_sweep(blocks) -> Schedule:
    """Repeated greedy sweeps over blocks sorted by right endpoint.

    Sort by (R, L); each round scans the remaining blocks in order and takes
    every block that starts strictly right of everything taken so far in
    the round. Repeats until no blocks remain. This is the default
    strategy (CLI name: ``paper``).
    """
    remaining = sorted(blocks, key=lambda b: (b.R, b.L, b.gen))
    rounds = []
    while remaining:
        taken = []
        skipped = []
        last_r = None
        for b in remaining:
            if last_r is None or b.L > last_r:
                taken.append(b)
                last_r = b.R
            else:
                skipped.append(b)
        rounds.append(tuple(sorted(taken, key=lambda b: (b.L, b.R, b.gen))))
        remaining = skipped
    return Schedule(rounds=tuple(rounds))


def schedule_first_fit(blocks) -> Schedule:
    """First-fit interval packing: optimal round count for interval blocks.

    Blocks sorted by left endpoint go into the first round whose current
    rightmost endpoint they clear; the round count equals the maximum
    point-overlap depth.
    """
    ordered = sorted(blocks, key=lambda b: (b.L, b.R, b.gen))
    rounds: list[list[AncillaBlock]] = []
    round_max_r: list[int] = []
    for b in ordered:
        for i, r in enumerate(round_max_r):
            if b.L > r:
                rounds[i].append(b)
                round_max_r[i] = b.R
                break
        else:
            rounds.append([b])
            round_max_r.append(b.R)
    return Schedule(rounds=tuple(tuple(rnd) for rnd in rounds))


SCHEDULERS = {
    "paper": schedule_sweep,
    "first-fit": schedule_first_fit,
}


def depth_lower_bound(blocks) -> int:
    """Max number of blocks covering any single position; no schedule can
    use fewer rounds than this."""
    if not blocks:
        return 0
    events: dict[int, int] = {}
    for b in blocks:
        events[b.L] = events.get(b.L, 0) + 1
        events[b.R + 1] = events.get(b.R + 1, 0) - 1
    depth = 0
    best = 0
    for p in sorted(events):
        depth += events[p]
        if depth > best:
            best = depth
    return best


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)
    lower_bound: int = 0


def validate_schedule(schedule: Schedule, blocks) -> ValidationReport:
    """Check coverage (every block scheduled exactly once, unmodified) and
    strict per-round disjointness; report the depth lower bound."""
    violations = []
    want = sorted(blocks)
    got = sorted(schedule.all_blocks())
    if want != got:
        want_gens = {b.gen for b in blocks}
        got_gens = {b.gen for b in schedule.all_blocks()}
        for gen in sorted(want_gens - got_gens):
            violations.append(f"generator {gen} is missing from the schedule")
        for gen in sorted(got_gens - want_gens):
            violations.append(f"generator {gen} is scheduled but not requested")
        if want_gens == got_gens:
            violations.append("scheduled blocks do not match the requested intervals")
    for rnd_idx, rnd in enumerate(schedule.rounds):
        members = sorted(rnd, key=lambda b: (b.L, b.R))
        for prev, cur in zip(members, members[1:]):
            if cur.L <= prev.R:
                violations.append(
                    f"round {rnd_idx}: blocks for generators {prev.gen} and {cur.gen} "
                    f"overlap at position {cur.L}"
                )
    return ValidationReport(
        ok=not violations,
        violations=violations,
        lower_bound=depth_lower_bound(blocks),
    )
