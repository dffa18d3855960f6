import csv
import io

import pytest

from paragame.controllers import arena_controller, bench_controller
from paragame.controllers.bench_controller import (
    WIDE_COLUMNS,
    Family,
    disagreements,
    expected_outcome,
    family_instances,
    gen_family,
    qbf_instances,
    random_arena,
    random_instances,
    run_bench,
    wide_rows,
    write_records_csv,
    write_wide,
)
from paragame.core.errors import GeneratorError, InputError
from paragame.models.verdict import Algorithm, Outcome
from paragame.schemas.bench import BenchRecord
from paragame.schemas.diagnostics import Severity


@pytest.mark.parametrize(
    "family, n, count",
    [("D-NW-1", 11, 24), ("D-NW-1", 3, 8), ("D-W-1", 3, 9), ("ND-NW", 3, 9), ("D-NW-2", 3, 9), ("D-W-2", 3, 8)],
)
def test_family_vertex_counts(family, n, count):
    assert len(gen_family(family, n).vertices) == count


def test_family_shapes(S):
    merged = gen_family("ND-NW", 3).arena
    assert merged.successors("v", "a") == ("x1", "x2", "x3")
    assert not merged.is_deterministic()

    escape = gen_family("D-W-1", 4).arena
    assert escape.nabla("v", "c", "s") == S("1-4")
    assert escape.nabla("v", "c", "t") == S("5-*")
    assert escape.enabled("s") == ()

    second = gen_family("D-W-2", 3)
    assert "s" not in second.vertices
    assert second.arena.nabla("v", "a", "v") == S("1-3")
    assert second.arena.nabla("x2", "a", "v") == S("1")
    assert second.arena.nabla("x1", "a", "v") == S("")
    assert second.name == "D-W-2-3"
    assert (second.initial, second.target) == ("v", "t")


@pytest.mark.parametrize("family", [f.value for f in Family])
def test_family_arenas_are_complete(family):
    for n in range(2, 6):
        diagnostics = arena_controller.validate(gen_family(family, n))
        assert [d for d in diagnostics if d.severity == Severity.ERROR] == []


def test_family_errors():
    with pytest.raises(GeneratorError):
        gen_family("D-X-9", 3)
    with pytest.raises(GeneratorError):
        gen_family("D-W-1", 1)
    with pytest.raises(GeneratorError):
        family_instances(["nope"], [2])


def test_expected_outcomes():
    assert expected_outcome("D-W-1") == Outcome.WIN
    assert expected_outcome("D-W-2") == Outcome.WIN
    assert expected_outcome("D-NW-1") == Outcome.LOSE
    assert expected_outcome("ND-NW") == Outcome.LOSE
    assert expected_outcome("D-NW-2") == Outcome.LOSE


def test_random_arenas_are_seeded_and_complete():
    first = arena_controller.format_arena(random_arena(5))
    assert first == arena_controller.format_arena(random_arena(5))
    for seed in range(60):
        game = random_arena(seed)
        assert game.target == "t" and game.initial == "q0"
        assert 2 <= len(game.vertices) <= 6
        errors = [d for d in arena_controller.validate(game) if d.severity == Severity.ERROR]
        assert errors == [], seed
    with pytest.raises(GeneratorError):
        random_arena(0, max_vertices=1)


def test_instance_builders():
    qbf = qbf_instances([1, 2, 3], clauses=3, seed=10)
    assert [i.variables for i in qbf] == [1, 2, 3]
    assert all(i.family == "QBF" and i.clauses == 3 for i in qbf)
    assert qbf[0].name == "qbf-1-3-11"

    rnd = random_instances(3, seed=4)
    assert [i.name for i in rnd] == ["random-4", "random-5", "random-6"]


def test_run_bench_records_and_wide_csv():
    instances = family_instances(["D-W-1", "D-NW-1"], [2, 3])
    records = run_bench(instances, list(Algorithm), timeout=60)
    assert len(records) == len(instances) * len(Algorithm)
    assert disagreements(records) == []

    for inst in instances:
        outcomes = {r.outcome for r in records if r.name == inst.name}
        assert outcomes == {expected_outcome(inst.family)}

    walt = next(r for r in records if r.algorithm == Algorithm.WALT)
    assert walt.lattice_size is not None
    assert walt.total_seconds >= walt.solve_seconds
    assert walt.iterations >= 1
    dfs = next(r for r in records if r.algorithm == Algorithm.DFS)
    assert dfs.lattice_size is None

    out = io.StringIO()
    write_wide(records, out)
    rows = list(csv.DictReader(io.StringIO(out.getvalue())))
    assert out.getvalue().splitlines()[0] == ",".join(WIDE_COLUMNS)
    assert [r["Name"] for r in rows] == ["D-W-1-2", "D-W-1-3", "D-NW-1-2", "D-NW-1-3"]
    assert [r["Verdict"] for r in rows] == ["WIN", "WIN", "LOSE", "LOSE"]
    assert rows[0]["n"] == "2"
    assert rows[2]["Lattice size"] == "8"
    assert all(r["Alt"] and r["Fin"] and r["Explicit"] and r["Attractor"] for r in rows)


def test_family_one_lattice_sizes_in_bench():
    records = run_bench(family_instances(["D-NW-1"], [2, 3]), [Algorithm.WALT], timeout=60)
    assert [r.lattice_size for r in records] == [8, 16]


def test_tiny_timeout_marks_every_algorithm():
    records = run_bench(family_instances(["D-NW-1"], [8]), list(Algorithm), timeout=1e-9)
    assert {r.outcome for r in records} == {Outcome.TIMEOUT}
    rows = wide_rows(records)
    assert rows[0]["Verdict"] == "TIMEOUT"
    assert rows[0]["Alt"] == "timeout"
    assert rows[0]["Lattice size"] == ""


def test_disagreement_is_reported_as_mismatch():
    records = [
        BenchRecord(name="x", family="f", algorithm=Algorithm.WALT, outcome=Outcome.WIN, solve_seconds=0.1, total_seconds=0.1),
        BenchRecord(name="x", family="f", algorithm=Algorithm.DFS, outcome=Outcome.LOSE, solve_seconds=0.1, total_seconds=0.1),
        BenchRecord(name="y", family="f", algorithm=Algorithm.DFS, outcome=Outcome.TIMEOUT),
    ]
    assert disagreements(records) == ["x"]
    rows = wide_rows(records)
    assert rows[0]["Verdict"] == "MISMATCH"
    assert rows[1]["Verdict"] == "TIMEOUT"


def test_records_csv(tmp_path):
    records = run_bench(random_instances(3, seed=1), [Algorithm.WALT, Algorithm.ATTRACTOR], timeout=60, workers=2)
    path = tmp_path / "records.csv"
    write_records_csv(records, path)
    rows = list(csv.DictReader(path.open(encoding="utf-8")))
    assert len(rows) == 6
    assert rows[0]["name"] == "random-1"
    assert rows[0]["algorithm"] == "walt"
    assert rows[1]["lattice_size"] == ""
    assert {r["outcome"] for r in rows} <= {"WIN", "LOSE"}


def test_unwritable_csv_is_an_input_error(tmp_path):
    with pytest.raises(InputError):
        bench_controller.write_csv([], tmp_path / "missing-dir" / "out.csv")
