import pytest

from paragame.controllers import arena_controller
from paragame.controllers.bench_controller import gen_family
from paragame.core.errors import ArenaSyntaxError, ArenaValidationError, InputError, UnknownNameError
from paragame.core.intervalset import EMPTY, NATURALS
from paragame.schemas.diagnostics import Severity


def test_sample_shape(sample):
    arena = sample.arena
    assert len(arena.vertices) == 7
    assert arena.actions == ("a", "b", "c")
    assert sample.target == "t"
    assert sample.initial == "v"


def test_nabla_lookups(sample, S):
    arena = sample.arena
    assert arena.nabla("v", "a", "x1") == NATURALS
    assert arena.nabla("v", "a", "y1") == EMPTY
    assert arena.nabla("x1", "b", "y1") == S("1")
    with pytest.raises(UnknownNameError):
        arena.nabla("v", "a", "nowhere")


def test_enabled_and_successors(sample):
    arena = sample.arena
    assert arena.enabled("v") == ("a", "c")
    assert arena.enabled("t") == ()
    assert arena.enabled("x1") == ("b",)
    assert arena.successors("v", "a") == ("x1", "x2")
    assert arena.successors("v", "c") == ("s", "t")
    assert arena.successors("y1", "b") == ("t",)


def test_nabla_subset(sample):
    arena = sample.arena
    assert arena.nabla_subset("v", "a", {"x1", "x2"}) == NATURALS
    assert arena.nabla_subset("x1", "b", {"v", "y1"}) == EMPTY
    assert arena.nabla_subset("v", "a", {"x1"}) == EMPTY
    assert arena.nabla_subset("v", "a", {"x1", "t"}) == EMPTY


def test_partition_blocks(sample, S):
    blocks = dict(sample.arena.partition("x2", "b"))
    assert blocks == {frozenset({"y2"}): S("2"), frozenset({"v"}): S("1,3-*")}
    assert dict(sample.arena.partition("v", "a")) == {frozenset({"x1", "x2"}): NATURALS}


def test_determinism(sample):
    assert not sample.arena.is_deterministic()
    assert gen_family("D-NW-1", 3).arena.is_deterministic()


def test_sample_validates_with_only_the_sink_warning(sample):
    diagnostics = arena_controller.validate(sample)
    assert [d.severity for d in diagnostics] == [Severity.WARNING]
    assert diagnostics[0].vertex == "s"


def test_incomplete_action_is_an_error():
    game = arena_controller.parse_arena(
        "vertices v x1 t\nactions a\ntarget t\nedge v a x1 1-5\nedge x1 a t *\n"
    )
    errors = [d for d in arena_controller.validate(game) if d.severity == Severity.ERROR]
    assert len(errors) == 1
    assert (errors[0].vertex, errors[0].action) == ("v", "a")
    assert "6-*" in errors[0].message
    with pytest.raises(ArenaValidationError):
        arena_controller.require_valid(game)


def test_repeated_edges_are_unioned(S):
    game = arena_controller.parse_arena(
        "vertices v s t\nactions c\ntarget t\n"
        "edge v c s 1-2\nedge v c t 3-*\nedge v c t 10-*\n"
    )
    assert game.arena.nabla("v", "c", "t") == S("3-*")


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices v t\nactions a\n", None),
        ("vertices v t\nactions a\ntarget t\nedge v b t *\n", 4),
        ("vertices v t\nactions a\ntarget t\nedge v a t 0\n", 4),
        ("vertices v t\nactions a\ntarget t\nfrobnicate\n", 4),
        ("vertices v t\nvertices w\n", 2),
        ("edge v a t *\n", 1),
    ],
)
def test_syntax_errors_carry_line_numbers(text, line):
    with pytest.raises(ArenaSyntaxError) as exc:
        arena_controller.parse_arena(text)
    assert exc.value.line == line


def test_unknown_target_is_rejected():
    with pytest.raises(ArenaSyntaxError):
        arena_controller.parse_arena("vertices v\nactions a\ntarget t\n")


def test_comments_and_blank_lines_are_ignored(sample_text):
    noisy = "# header\n\n" + sample_text.replace("edge y1 b t *", "edge y1 b t *   # always")
    game = arena_controller.parse_arena(noisy)
    assert game.arena.constraints == arena_controller.parse_arena(sample_text).arena.constraints


def test_format_arena_parses_back(sample):
    again = arena_controller.parse_arena(arena_controller.format_arena(sample))
    assert again.arena.constraints == sample.arena.constraints
    assert (again.target, again.initial) == (sample.target, sample.initial)


def test_missing_file_is_an_input_error(tmp_path):
    with pytest.raises(InputError):
        arena_controller.read_arena(tmp_path / "missing.pga")
