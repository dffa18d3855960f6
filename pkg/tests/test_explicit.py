import pytest

from paragame.controllers import arena_controller, explicit_controller, symbolic_controller
from paragame.controllers.explicit_controller import DfsSolver, attractor_solve, build_reachable, dfs_solve, explicit_solve
from paragame.core.deadline import Deadline
from paragame.core.errors import SolveTimeout
from paragame.core.intervalset import NATURALS
from paragame.models.knowledge_game import AdamNode, EveNode
from paragame.models.verdict import Verdict


def test_sample_knowledge_game_nodes(sample, S):
    kg = build_reachable(sample)
    assert kg.root == EveNode("v", NATURALS)
    assert kg.successors(AdamNode("v", NATURALS, "a")) == [EveNode("x1", NATURALS), EveNode("x2", NATURALS)]
    assert kg.successors(AdamNode("v", NATURALS, "c")) == [EveNode("s", S("1-2")), EveNode("t", S("3-*"))]
    assert kg.successors(AdamNode("x1", NATURALS, "b")) == [EveNode("v", S("2-*")), EveNode("y1", S("1"))]
    for node in (EveNode("y2", S("2")), EveNode("v", S("1,3-*")), EveNode("t", S("1"))):
        assert node in kg
    # knowledge never grows along a play
    for src in kg.adam_nodes:
        for dst in kg.successors(src):
            assert dst.knowledge <= src.knowledge


def test_target_root_is_not_expanded(sample):
    kg = build_reachable(sample, "t")
    assert len(kg) == 1
    assert kg.edge_count() == 0
    assert attractor_solve(kg) == Verdict.WIN


@pytest.mark.parametrize("start, expected", [("v", Verdict.LOSE), ("y1", Verdict.WIN), ("y2", Verdict.WIN), ("x1", Verdict.LOSE)])
def test_explicit_verdicts(sample, start, expected):
    assert explicit_solve(sample, start) == expected
    assert dfs_solve(sample, start) == expected


def test_explicit_agrees_with_region_on_every_lattice_element(sample, sample_lattice):
    trace = symbolic_controller.solve_walt(sample)
    for v in sample.vertices:
        for k in sample_lattice.elements:
            if not k:
                continue
            expected = Verdict.of(trace.winning(v, k))
            assert explicit_solve(sample, v, k) == expected, (v, k.format())
            assert DfsSolver(sample).solve(v, k) == expected, (v, k.format())


def test_adam_node_without_moves_is_won_by_eve(S):
    game = arena_controller.parse_arena("vertices v t\nactions a\ntarget t\ninit v\nedge v a t 1-2\n")
    kg = build_reachable(game, knowledge=S("5"))
    assert kg.successors(AdamNode("v", S("5"), "a")) == []
    assert attractor_solve(kg) == Verdict.WIN


def test_dfs_statistics(sample):
    solver = DfsSolver(sample)
    assert solver.solve("y1") == Verdict.WIN
    assert solver.max_depth == 1
    assert solver.subgames == 1

    solver = DfsSolver(sample)
    assert solver.solve("v") == Verdict.LOSE
    assert solver.max_depth > 1
    assert solver.memo[EveNode("v", NATURALS)] is False


def test_dot_export(sample):
    dot = build_reachable(sample).to_dot()
    lines = dot.splitlines()
    assert lines[0] == "digraph knowledge_game {"
    assert lines[1] == '  n0 [label="v | *", shape=ellipse, style=bold];'
    assert lines[-1] == "}"
    assert "shape=doublecircle" in dot
    assert 'label="a", shape=box' in dot
    assert dot == build_reachable(sample).to_dot()


def test_expired_deadline(sample):
    with pytest.raises(SolveTimeout):
        explicit_controller.explicit_solve(sample, deadline=Deadline(-1.0))
    with pytest.raises(SolveTimeout):
        dfs_solve(sample, deadline=Deadline(-1.0))
