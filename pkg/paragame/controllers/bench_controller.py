# paragame/controllers/bench_controller.py
"""
Synthetic arena families, random arenas, and the benchmark runner.

Families (n >= 2, start vertex v, target t):

    D-NW-1  v --a_i/ℕ--> x_i,  x_i --b/=i--> y_i,  x_i --b/≠i--> v,  y_i --b/ℕ--> t
    D-W-1   D-NW-1 plus v --c/≤n--> s, v --c/>n--> t
    ND-NW   D-W-1 with the a_i merged into one action a
    D-NW-2  v --a/>n--> t, v --a/≤n--> s, v --b_i/ℕ--> x_i,
            x_i --a/<i--> v, x_i --a/=i--> t, x_i --a/>i--> s_i   (sinks loop on a)
    D-W-2   D-NW-2 with v --a/≤n--> v instead of the edge to s (no s)
"""
from __future__ import annotations

import csv
import enum
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TextIO

from paragame.controllers import explicit_controller, lattice_controller, symbolic_controller
from paragame.controllers.qbf_controller import gen_random, reduce_to_game
from paragame.core.config import settings
from paragame.core.deadline import Deadline
from paragame.core.errors import GeneratorError, InputError, ResourceLimitError
from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet
from paragame.models.arena import Edge, ParamArena, ReachGame
from paragame.models.lattice import Lattice
from paragame.models.verdict import Algorithm, Outcome
from paragame.schemas.bench import BenchRecord

logger = logging.getLogger(__name__)


class Family(str, enum.Enum):
    D_NW_1 = "D-NW-1"
    D_W_1 = "D-W-1"
    ND_NW = "ND-NW"
    D_NW_2 = "D-NW-2"
    D_W_2 = "D-W-2"


# ---------------------------
# Family generators
# ---------------------------

def _family_one(n: int, *, escape: bool, merged: bool) -> tuple[list[str], list[str], dict[Edge, IntervalSet]]:
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{i}" for i in range(1, n + 1)]
    vertices = ["v", *xs, *ys, *(["s"] if escape else []), "t"]
    actions = (["a"] if merged else [f"a{i}" for i in range(1, n + 1)]) + ["b"] + (["c"] if escape else [])

    edges: dict[Edge, IntervalSet] = {}
    for i in range(1, n + 1):
        edges[("v", "a" if merged else f"a{i}", f"x{i}")] = NATURALS
    for i in range(1, n + 1):
        only_i = IntervalSet.singleton(i)
        edges[(f"x{i}", "b", f"y{i}")] = only_i
        edges[(f"x{i}", "b", "v")] = NATURALS - only_i
        edges[(f"y{i}", "b", "t")] = NATURALS
    if escape:
        edges[("v", "c", "s")] = IntervalSet.closed(1, n)
        edges[("v", "c", "t")] = IntervalSet.at_least(n + 1)
    return vertices, actions, edges


def _family_two(n: int, *, winning: bool) -> tuple[list[str], list[str], dict[Edge, IntervalSet]]:
    xs = [f"x{i}" for i in range(1, n + 1)]
    sinks = [f"s{i}" for i in range(1, n + 1)]
    vertices = ["v", *xs, *sinks, *([] if winning else ["s"]), "t"]
    actions = ["a", *(f"b{i}" for i in range(1, n + 1))]

    edges: dict[Edge, IntervalSet] = {
        ("v", "a", "t"): IntervalSet.at_least(n + 1),
        ("v", "a", "v" if winning else "s"): IntervalSet.closed(1, n),
    }
    for i in range(1, n + 1):
        edges[("v", f"b{i}", f"x{i}")] = NATURALS
    for i in range(1, n + 1):
        edges[(f"x{i}", "a", "v")] = IntervalSet.closed(1, i - 1)
        edges[(f"x{i}", "a", "t")] = IntervalSet.singleton(i)
        edges[(f"x{i}", "a", f"s{i}")] = IntervalSet.at_least(i + 1)
        edges[(f"s{i}", "a", f"s{i}")] = NATURALS
    if not winning:
        edges[("s", "a", "s")] = NATURALS
    return vertices, actions, edges


def gen_family(family: Family | str, n: int) -> ReachGame:
    try:
        family = Family(family)
    except ValueError:
        raise GeneratorError(f"unknown family {family!r} (choose from {', '.join(f.value for f in Family)})") from None
    if n < 2:
        raise GeneratorError("family parameter n must be >= 2")

    if family == Family.D_NW_1:
        parts = _family_one(n, escape=False, merged=False)
    elif family == Family.D_W_1:
        parts = _family_one(n, escape=True, merged=False)
    elif family == Family.ND_NW:
        parts = _family_one(n, escape=True, merged=True)
    elif family == Family.D_NW_2:
        parts = _family_two(n, winning=False)
    else:
        parts = _family_two(n, winning=True)

    vertices, actions, edges = parts
    return ReachGame(
        arena=ParamArena(vertices, actions, edges),
        target="t",
        initial="v",
        name=f"{family.value}-{n}",
    )


def expected_outcome(family: Family | str) -> Outcome:
    return Outcome.WIN if "-W-" in Family(family).value else Outcome.LOSE


# ---------------------------
# Random complete arenas
# ---------------------------

def random_arena(
    seed: int,
    max_vertices: int = 6,
    max_actions: int = 3,
    max_endpoint: int = 8,
) -> ReachGame:
    """
    Random arena, complete for every enabled action: ℕ is cut into
    consecutive segments and each segment is handed to one or more
    successors (several means non-determinism).
    """
    if max_vertices < 2 or max_actions < 1 or max_endpoint < 2:
        raise GeneratorError("random arenas need >= 2 vertices, >= 1 action and max_endpoint >= 2")

    rng = random.Random(seed)
    nv = rng.randint(2, max_vertices)
    na = rng.randint(1, max_actions)
    vertices = [f"q{i}" for i in range(nv - 1)] + ["t"]
    actions = [f"a{i}" for i in range(na)]

    edges: dict[Edge, IntervalSet] = {}
    for v in vertices[:-1]:
        for a in rng.sample(actions, rng.randint(1, na)):
            cuts = sorted(rng.sample(range(2, max_endpoint + 1), rng.randint(0, min(3, max_endpoint - 1))))
            bounds = [1, *cuts]
            for idx, lo in enumerate(bounds):
                segment = (
                    IntervalSet.closed(lo, bounds[idx + 1] - 1)
                    if idx + 1 < len(bounds)
                    else IntervalSet.at_least(lo)
                )
                width = 1 if rng.random() < 0.6 else rng.randint(1, min(3, nv))
                for w in rng.sample(vertices, width):
                    edges[(v, a, w)] = edges.get((v, a, w), EMPTY) | segment

    return ReachGame(
        arena=ParamArena(vertices, actions, edges),
        target="t",
        initial="q0",
        name=f"random-{seed}",
    )


# ---------------------------
# Runner
# ---------------------------

@dataclass
class BenchInstance:
    name: str
    family: str
    game: ReachGame
    n: Optional[int] = None
    variables: Optional[int] = None
    clauses: Optional[int] = None


def family_instances(families: Iterable[Family | str], ns: Iterable[int]) -> list[BenchInstance]:
    ns = list(ns)
    out = []
    for fam in families:
        for n in ns:
            game = gen_family(fam, n)
            out.append(BenchInstance(name=game.name, family=Family(fam).value, game=game, n=n))
    return out


def qbf_instances(var_counts: Iterable[int], clauses: int, seed: int, width: int = 2) -> list[BenchInstance]:
    out = []
    for nv in var_counts:
        f = gen_random(nv, clauses, min(width, nv), seed + nv)
        name = f"qbf-{nv}-{clauses}-{seed + nv}"
        out.append(BenchInstance(
            name=name, family="QBF", game=reduce_to_game(f, name=name), variables=nv, clauses=clauses,
        ))
    return out


def random_instances(count: int, seed: int) -> list[BenchInstance]:
    out = []
    for s in range(seed, seed + count):
        game = random_arena(s)
        out.append(BenchInstance(name=game.name, family="random", game=game))
    return out


def _timed(fn: Callable[[], object]) -> tuple[object, float]:
    started = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - started


def _run_instance(
    instance: BenchInstance,
    algorithms: Sequence[Algorithm],
    timeout: Optional[float],
) -> list[BenchRecord]:
    game = instance.game
    common = dict(
        name=instance.name,
        family=instance.family,
        n=instance.n,
        variables=instance.variables,
        clauses=instance.clauses,
    )

    lattice: Optional[Lattice] = None
    lattice_seconds: Optional[float] = None
    if Algorithm.WK in algorithms or Algorithm.WALT in algorithms:
        try:
            lattice, lattice_seconds = _timed(
                lambda: lattice_controller.build(game, deadline=Deadline(timeout))
            )
        except ResourceLimitError as e:
            logger.warning("bench lattice failed instance=%s detail=%s", instance.name, e.detail)

    records = []
    for algo in algorithms:
        record = BenchRecord(algorithm=algo, outcome=Outcome.TIMEOUT, **common)
        uses_lattice = algo in (Algorithm.WK, Algorithm.WALT) and lattice is not None
        if uses_lattice:
            record.lattice_size = len(lattice)
            record.lattice_seconds = lattice_seconds

        if algo == Algorithm.WK and lattice is None:
            records.append(record)
            continue

        deadline = Deadline(timeout)
        try:
            if algo in (Algorithm.WK, Algorithm.WALT):
                solver = symbolic_controller.solve_wk if algo == Algorithm.WK else symbolic_controller.solve_walt
                trace, seconds = _timed(lambda: solver(game, lattice, keep_trace=False, deadline=deadline))
                record.iterations = trace.converged_at
                outcome = symbolic_controller.verdict(game, None, trace)
            elif algo == Algorithm.ATTRACTOR:
                outcome, seconds = _timed(lambda: explicit_controller.explicit_solve(game, deadline=deadline))
            else:
                outcome, seconds = _timed(lambda: explicit_controller.dfs_solve(game, deadline=deadline))
        except ResourceLimitError as e:
            logger.info("bench timeout instance=%s algorithm=%s detail=%s", instance.name, algo.value, e.detail)
        else:
            record.outcome = Outcome(outcome.value)
            record.solve_seconds = seconds
            record.total_seconds = seconds + (lattice_seconds if uses_lattice else 0.0)
        records.append(record)
    return records


def run_bench(
    instances: Sequence[BenchInstance],
    algorithms: Sequence[Algorithm | str],
    *,
    timeout: Optional[float] = None,
    workers: Optional[int] = None,
) -> list[BenchRecord]:
    """One record per (instance, algorithm), in input order."""
    algos = [Algorithm(a) for a in algorithms]
    timeout = settings.BENCH_TIMEOUT_SECONDS if timeout is None else timeout
    workers = settings.BENCH_WORKERS if workers is None else workers

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        per_instance = list(pool.map(lambda inst: _run_instance(inst, algos, timeout), instances))

    records = [r for group in per_instance for r in group]
    for name in disagreements(records):
        logger.error("bench outcomes disagree instance=%s", name)
    logger.info("bench done instances=%s records=%s", len(instances), len(records))
    return records


def disagreements(records: Iterable[BenchRecord]) -> list[str]:
    seen: dict[str, set[Outcome]] = {}
    for r in records:
        if r.outcome != Outcome.TIMEOUT:
            seen.setdefault(r.name, set()).add(r.outcome)
    return [name for name, outcomes in seen.items() if len(outcomes) > 1]


# ---------------------------
# CSV
# ---------------------------

WIDE_COLUMNS = [
    "Name", "n", "Alt", "Alt [Total]", "Fin", "Fin [Total]",
    "Explicit", "Attractor", "Lattice size", "Lattice time", "Verdict",
]


def _seconds(value: Optional[float], outcome: Outcome) -> str:
    if outcome == Outcome.TIMEOUT:
        return "timeout"
    return f"{value:.3f}" if value is not None else ""


def wide_rows(records: Sequence[BenchRecord]) -> list[dict[str, str]]:
    grouped: dict[str, dict[Algorithm, BenchRecord]] = {}
    for r in records:
        grouped.setdefault(r.name, {})[r.algorithm] = r

    bad = set(disagreements(records))
    rows = []
    for name, by_algo in grouped.items():
        first = next(iter(by_algo.values()))
        row = {col: "" for col in WIDE_COLUMNS}
        row["Name"] = name
        row["n"] = str(first.n if first.n is not None else first.variables or "")

        walt = by_algo.get(Algorithm.WALT)
        wk = by_algo.get(Algorithm.WK)
        if walt:
            row["Alt"] = _seconds(walt.solve_seconds, walt.outcome)
            row["Alt [Total]"] = _seconds(walt.total_seconds, walt.outcome)
        if wk:
            row["Fin"] = _seconds(wk.solve_seconds, wk.outcome)
            row["Fin [Total]"] = _seconds(wk.total_seconds, wk.outcome)
        if Algorithm.DFS in by_algo:
            r = by_algo[Algorithm.DFS]
            row["Explicit"] = _seconds(r.solve_seconds, r.outcome)
        if Algorithm.ATTRACTOR in by_algo:
            r = by_algo[Algorithm.ATTRACTOR]
            row["Attractor"] = _seconds(r.solve_seconds, r.outcome)

        with_lattice = next((r for r in by_algo.values() if r.lattice_size is not None), None)
        if with_lattice:
            row["Lattice size"] = str(with_lattice.lattice_size)
            row["Lattice time"] = f"{with_lattice.lattice_seconds:.3f}"

        finished = {r.outcome for r in by_algo.values() if r.outcome != Outcome.TIMEOUT}
        if name in bad:
            row["Verdict"] = "MISMATCH"
        elif finished:
            row["Verdict"] = finished.pop().value
        else:
            row["Verdict"] = Outcome.TIMEOUT.value
        rows.append(row)
    return rows


def _open_csv(path: str | Path):
    p = Path(path)
    try:
        return p.open("w", newline="", encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {p}: {e.strerror or e}") from e


def write_wide(records: Sequence[BenchRecord], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=WIDE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(wide_rows(records))


def write_csv(records: Sequence[BenchRecord], path: str | Path) -> None:
    with _open_csv(path) as f:
        write_wide(records, f)


def write_records_csv(records: Sequence[BenchRecord], path: str | Path) -> None:
    fields = list(BenchRecord.model_fields)
    with _open_csv(path) as f:
        writer = csv.DictWriter(f, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in records:
            row = r.model_dump(mode="json")
            writer.writerow({k: "" if row[k] is None else row[k] for k in fields})
