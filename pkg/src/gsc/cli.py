"""Command-line front end: compile single graphs, run experiment sweeps,
re-verify stored results, and emit JSON/CSV for external plotting.

Exit codes: 0 success, 2 parse/format errors, 3 disconnected input,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

from . import graph as graphmod
from .compiler import (
    CompilationResult,
    CompileOptions,
    DisconnectedGraphError,
    VerificationError,
    compile_graph,
)
from .graph import Graph, GraphFormatError, graph_stats
from .mapping import DEFAULT_CONTRACTION_BUDGET, MAPPER_KINDS
from .scheduler import SCHEDULERS, build_blocks, validate_schedule
from .verify import verify_compilation

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_VERIFY = 4

DEFAULT_MINCUT_CAP = 300
DEFAULT_DENSITIES = (0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)

BENCH_KINDS = ("path", "star", "random_tree", "complete")


@dataclass(frozen=True)
class BenchRow:
    graph_kind: str
    n: int
    edge_count: int
    density: float
    mapper: str
    scheduler: str
    seed: int
    mis_size: int
    measured_count: int
    tocks: int
    lower_bound: int
    tiles_reduced: int
    volume: int
    wall_time_ms: float


BENCH_FIELDS = [f.name for f in fields(BenchRow)]


def parse_gen_spec(spec: str) -> tuple[str, int, int | None]:
    """Parse ``kind:n[:m]``, e.g. ``path:100`` or ``gnm:100:495``."""
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise GraphFormatError(f"generator spec must be kind:n[:m], got {spec!r}")
    kind = parts[0]
    if kind not in graphmod.GENERATOR_KINDS:
        raise GraphFormatError(f"unknown generator kind {kind!r}")
    try:
        n = int(parts[1])
        m = int(parts[2]) if len(parts) == 3 else None
    except ValueError as exc:
        raise GraphFormatError(f"non-integer size in generator spec {spec!r}") from exc
    return kind, n, m


def parse_sizes(spec: str) -> list[int]:
    """Size grid: comma list (``10,50,100``) or doubling range (``10..1000``)."""
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo < 1 or hi < lo:
            raise GraphFormatError(f"bad size range {spec!r}")
        sizes = []
        n = lo
        while n < hi:
            sizes.append(n)
            n *= 2
        sizes.append(hi)
        return sizes
    return [int(tok) for tok in spec.split(",") if tok.strip()]


def _load_input_graph(args) -> Graph:
    if args.gen:
        kind, n, m = parse_gen_spec(args.gen)
        return graphmod.generate(kind, n, m=m, seed=args.seed)
    return graphmod.load_graph(args.input)


def _options_from_args(args) -> CompileOptions:
    return CompileOptions(
        mapper=args.mapper,
        scheduler=args.scheduler,
        seed=args.seed,
        karger_budget=args.karger_budget,
        verify=args.verify,
    )


def cmd_compile(args) -> int:
    try:
        g = _load_input_graph(args)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = compile_graph(g, _options_from_args(args))
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    text = result.to_json_text()
    summary = (
        f"n={result.n} tocks={result.tocks} tiles={result.tiles_reduced} "
        f"volume={result.spacetime_volume} verified={'yes' if result.verified else 'skipped'}"
    )
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = graphmod.load_graph(args.graph)
        obj = CompilationResult.from_json_dict(
            json.loads(Path(args.result).read_text(encoding="utf-8"))
        )
    except (GraphFormatError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if obj.n != g.n or obj.mapping.n != g.n:
        print(
            f"error: result describes {obj.n} qubits but graph has {g.n} vertices",
            file=sys.stderr,
        )
        return EXIT_PARSE
    blocks = build_blocks(g, obj.plan.measured, obj.mapping)
    report = validate_schedule(obj.schedule, blocks)
    if not report.ok:
        for v in report.violations:
            print(f"violation: {v}", file=sys.stderr)
        print("FAIL: schedule validation", file=sys.stderr)
        return EXIT_VERIFY
    try:
        vr = verify_compilation(g, obj.plan, obj.schedule)
    except ValueError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if not vr.ok:
        print(f"FAIL: {vr.failure}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"PASS: schedule valid, state verified ({vr.checked_generators} projections)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Bench suites


def _instance_seed(base_seed: int, key: str) -> int:
    return random.Random(f"bench:{base_seed}:{key}").getrandbits(48)


def run_bench_instance(task: dict) -> dict:
    """Worker: build one graph, compile it, return a BenchRow as a dict."""
    kind = task["kind"]
    n = task["n"]
    m = task.get("m")
    seed = task["seed"]
    g = graphmod.generate(kind, n, m=m, seed=seed)
    stats = graph_stats(g)
    options = CompileOptions(
        mapper=task["mapper"],
        scheduler=task["scheduler"],
        seed=seed,
        karger_budget=task["karger_budget"],
        verify="never" if task["skip_verify"] else "auto",
    )
    t0 = time.perf_counter()
    result = compile_graph(g, options)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    blocks = build_blocks(g, result.plan.measured, result.mapping)
    report = validate_schedule(result.schedule, blocks)
    if not report.ok:
        raise VerificationError("bench instance failed schedule validation")
    row = BenchRow(
        graph_kind=task["label"],
        n=n,
        edge_count=stats.edge_count,
        density=stats.density,
        mapper=task["mapper"],
        scheduler=task["scheduler"],
        seed=task["rep"],
        mis_size=len(result.plan.independent_set),
        measured_count=len(result.plan.measured),
        tocks=result.tocks,
        lower_bound=report.lower_bound,
        tiles_reduced=result.tiles_reduced,
        volume=result.spacetime_volume,
        wall_time_ms=0.0 if task["zero_timings"] else elapsed_ms,
    )
    return {"key": task["key"], "row": row.__dict__}


def _build_tasks(args) -> list[dict]:
    mappers = [m.strip() for m in args.mappers.split(",") if m.strip()]
    for m in mappers:
        if m not in MAPPER_KINDS:
            raise GraphFormatError(f"unknown mapper {m!r}")
    schedulers = [s.strip() for s in args.schedulers.split(",") if s.strip()]
    for s in schedulers:
        if s not in SCHEDULERS:
            raise GraphFormatError(f"unknown scheduler {s!r}")
    tasks = []

    def add(kind: str, label: str, n: int, m: int | None, rep: int) -> None:
        for mapper in mappers:
            if mapper == "mincut" and n > args.mincut_cap:
                continue
            for sched in schedulers:
                key = f"{label}:{n}:{m}:{rep}:{mapper}:{sched}"
                tasks.append(
                    {
                        "key": key,
                        "label": label,
                        "kind": kind,
                        "n": n,
                        "m": m,
                        "rep": rep,
                        "seed": _instance_seed(args.seed, f"{label}:{n}:{m}:{rep}"),
                        "mapper": mapper,
                        "scheduler": sched,
                        "karger_budget": args.karger_budget,
                        "skip_verify": not args.bench_verify,
                        "zero_timings": args.timings == "zero",
                    }
                )

    if args.suite == "types":
        sizes = parse_sizes(args.n_spec or "10..1000")
        kinds = [args.kind] if args.kind else list(BENCH_KINDS)
        for kind in kinds:
            if kind not in BENCH_KINDS:
                raise GraphFormatError(f"unknown bench kind {kind!r}")
            for n in sizes:
                reps = args.seeds if kind == "random_tree" else 1
                for rep in range(reps):
                    add(kind, kind, n, None, rep)
    elif args.suite == "density":
        sizes = parse_sizes(args.n_spec or "100")
        densities = (
            [float(d) for d in args.densities.split(",")] if args.densities else list(DEFAULT_DENSITIES)
        )
        for n in sizes:
            total = n * (n - 1) // 2
            for d in densities:
                m = max(n - 1, min(total, round(d * total)))
                for rep in range(args.seeds):
                    add("gnm", f"gnm_d{d:g}", n, m, rep)
    elif args.suite == "scaling":
        sizes = parse_sizes(args.n_spec or "10..1000")
        families = [args.family] if args.family else ["sparse", "dense"]
        for family in families:
            for n in sizes:
                total = n * (n - 1) // 2
                if family == "sparse":
                    m = min(total, max(n - 1, math.ceil(n * math.log2(n)) if n > 1 else 0))
                elif family == "dense":
                    m = min(total, max(n - 1, math.ceil(n * n / math.log2(n)) if n > 1 else 0))
                else:
                    raise GraphFormatError(f"unknown family {args.family!r}")
                for rep in range(args.seeds):
                    add("gnm", family, n, m, rep)
    else:
        raise GraphFormatError(f"unknown suite {args.suite!r}")
    return tasks


def _format_row(row: dict) -> dict:
    out = dict(row)
    out["density"] = f"{row['density']:.6f}"
    out["wall_time_ms"] = f"{row['wall_time_ms']:.3f}"
    return out


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_format_row(row))
    return buf.getvalue()


def cmd_bench(args) -> int:
    try:
        tasks = _build_tasks(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    results: dict[str, dict] = {}
    if args.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            for out in pool.map(run_bench_instance, tasks, chunksize=1):
                results[out["key"]] = out["row"]
    else:
        for task in tasks:
            out = run_bench_instance(task)
            results[out["key"]] = out["row"]
    # merge in task order (instance key order), not completion order
    rows = [results[t["key"]] for t in tasks]
    text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsc",
        description="Compile graphs into verified parity-check schedules for a "
        "2-row surface-code layout, and benchmark the result.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compile", help="compile one graph and emit the result JSON")
    src = pc.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", help="graph file (.json / .adj / .edges)")
    src.add_argument("--gen", help="generator spec kind:n[:m], e.g. path:100 or gnm:100:495")
    pc.add_argument("--mapper", choices=MAPPER_KINDS, default="mincut")
    pc.add_argument("--scheduler", choices=sorted(SCHEDULERS), default="paper")
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--karger-budget", type=int, default=DEFAULT_CONTRACTION_BUDGET,
                    help="max contractions per min-cut invocation")
    pc.add_argument("--verify", choices=("auto", "always", "never"), default="auto")
    pc.add_argument("--out", help="result JSON path (default: stdout)")
    pc.set_defaults(func=cmd_compile)

    pb = sub.add_parser("bench", help="run an experiment sweep and emit CSV")
    pb.add_argument("--suite", choices=("types", "density", "scaling"), required=True)
    pb.add_argument("--kind", help="types suite: restrict to one graph kind")
    pb.add_argument("--n", dest="n_spec", default=None,
                    help="vertex counts: single value, comma list, or doubling "
                    "range a..b (defaults: 10..1000; density suite: 100)")
    pb.add_argument("--densities", help="density suite: comma list of densities")
    pb.add_argument("--family", choices=("sparse", "dense"), help="scaling suite: edge family")
    pb.add_argument("--seeds", type=int, default=10, help="instances per grid point")
    pb.add_argument("--seed", type=int, default=0, help="base seed")
    pb.add_argument("--mappers", default="mincut,random")
    pb.add_argument("--schedulers", default="paper,first-fit")
    pb.add_argument("--karger-budget", type=int, default=DEFAULT_CONTRACTION_BUDGET)
    pb.add_argument("--mincut-cap", type=int, default=DEFAULT_MINCUT_CAP,
                    help="skip the mincut mapper above this size")
    pb.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                    help="parallel worker processes (default: available cores)")
    pb.add_argument("--timings", choices=("real", "zero"), default="real",
                    help="zero makes the CSV byte-reproducible")
    pb.add_argument("--bench-verify", action="store_true",
                    help="run tableau verification on bench instances (size-capped)")
    pb.add_argument("--out", help="CSV path (default: stdout)")
    pb.set_defaults(func=cmd_bench)

    pv = sub.add_parser("verify", help="re-validate a stored compile result")
    pv.add_argument("--graph", required=True, help="graph file")
    pv.add_argument("--result", required=True, help="compile result JSON")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
