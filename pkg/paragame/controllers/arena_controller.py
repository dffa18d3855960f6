# paragame/controllers/arena_controller.py
"""
Arena file format (UTF-8, line oriented, '#' starts a comment):

    vertices v x1 x2 y1 y2 s t
    actions a b c
    target t
    init v
    edge v a x1 *
    edge v c t 3-*

Several `edge` lines for the same (v, a, v') are unioned.
"""
from __future__ import annotations

import logging
import random
from pathlib import Path
from typing import Iterable, Optional

from paragame.core.config import settings
from paragame.core.errors import (
    ArenaSyntaxError,
    ArenaValidationError,
    InputError,
    IntervalSyntaxError,
    UnknownNameError,
)
from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet
from paragame.models.arena import Edge, ParamArena, ReachGame
from paragame.schemas.diagnostics import Diagnostic, Severity

logger = logging.getLogger(__name__)

# nabla_subset is cross-checked against the refinement only below this size
_MAX_ENUMERATED_SUCCESSORS = 10


# ---------------------------
# Parsing / formatting
# ---------------------------

def parse_arena(text: str, *, name: str = "game") -> ReachGame:
    vertices: Optional[list[str]] = None
    actions: Optional[list[str]] = None
    target: Optional[str] = None
    initial: Optional[str] = None
    edges: dict[Edge, IntervalSet] = {}
    edge_lines: dict[Edge, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()

        if head == "vertices":
            if vertices is not None:
                raise ArenaSyntaxError("duplicate 'vertices' line", lineno)
            if not rest:
                raise ArenaSyntaxError("'vertices' needs at least one name", lineno)
            vertices = rest
        elif head == "actions":
            if actions is not None:
                raise ArenaSyntaxError("duplicate 'actions' line", lineno)
            actions = rest
        elif head == "target":
            if target is not None:
                raise ArenaSyntaxError("duplicate 'target' line", lineno)
            if len(rest) != 1:
                raise ArenaSyntaxError("'target' takes exactly one vertex", lineno)
            target = rest[0]
        elif head == "init":
            if initial is not None:
                raise ArenaSyntaxError("duplicate 'init' line", lineno)
            if len(rest) != 1:
                raise ArenaSyntaxError("'init' takes exactly one vertex", lineno)
            initial = rest[0]
        elif head == "edge":
            if len(rest) < 4:
                raise ArenaSyntaxError("expected 'edge <v> <action> <v'> <set>'", lineno)
            if vertices is None or actions is None:
                raise ArenaSyntaxError("'edge' before 'vertices'/'actions'", lineno)
            v, a, w = rest[0], rest[1], rest[2]
            for vertex in (v, w):
                if vertex not in vertices:
                    raise ArenaSyntaxError(f"unknown vertex {vertex!r}", lineno)
            if a not in actions:
                raise ArenaSyntaxError(f"unknown action {a!r}", lineno)
            try:
                k = IntervalSet.parse("".join(rest[3:]))
            except IntervalSyntaxError as e:
                raise ArenaSyntaxError(e.detail, lineno) from e
            key = (v, a, w)
            if key in edges:
                logger.debug("edge %s repeated on line %s, union taken", key, lineno)
            edges[key] = edges.get(key, EMPTY) | k
            edge_lines.setdefault(key, lineno)
        else:
            raise ArenaSyntaxError(f"unknown directive {head!r}", lineno)

    if vertices is None:
        raise ArenaSyntaxError("missing 'vertices' line")
    if actions is None:
        raise ArenaSyntaxError("missing 'actions' line")
    if target is None:
        raise ArenaSyntaxError("missing 'target' line")

    try:
        arena = ParamArena(vertices, actions, edges)
        return ReachGame(arena=arena, target=target, initial=initial, name=name)
    except UnknownNameError as e:
        raise ArenaSyntaxError(e.detail) from e


def format_arena(game: ReachGame) -> str:
    arena = game.arena
    lines = [
        "vertices " + " ".join(arena.vertices),
        "actions " + " ".join(arena.actions),
        f"target {game.target}",
    ]
    if game.initial is not None:
        lines.append(f"init {game.initial}")
    for (v, a, w), k in arena.constraints.items():
        lines.append(f"edge {v} {a} {w} {k.format()}")
    return "\n".join(lines) + "\n"


def read_arena(path: str | Path) -> ReachGame:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {p}: {e.strerror or e}") from e
    return parse_arena(text, name=p.stem)


def load_game(path: str | Path) -> ReachGame:
    """read_arena + validate; validation errors are raised, warnings logged."""
    game = read_arena(path)
    require_valid(game)
    return game


# ---------------------------
# Validation
# ---------------------------

def _sample_sets(game: ReachGame, count: int, seed: int) -> list[IntervalSet]:
    samples = [NATURALS, EMPTY, *game.arena.generators()]
    bound = 2
    for k in game.arena.generators():
        for lo, hi in k.intervals:
            bound = max(bound, lo + 1, (hi + 1) if hi != float("inf") else 0)
    rng = random.Random(seed)
    for _ in range(count):
        pairs = []
        for _ in range(rng.randint(1, 3)):
            lo = rng.randint(1, int(bound))
            hi = rng.randint(lo, int(bound))
            pairs.append((lo, hi))
        if rng.random() < 0.3:
            pairs.append((rng.randint(1, int(bound)), float("inf")))
        samples.append(IntervalSet(tuple(pairs)))
    return samples


def validate(game: ReachGame, *, samples: Optional[int] = None, seed: Optional[int] = None) -> list[Diagnostic]:
    arena = game.arena
    diagnostics: list[Diagnostic] = []
    sample_sets = _sample_sets(
        game,
        settings.VALIDATION_SAMPLES if samples is None else samples,
        settings.VALIDATION_SEED if seed is None else seed,
    )

    for v in arena.vertices:
        enabled = arena.enabled(v)
        if not enabled:
            if v != game.target:
                diagnostics.append(Diagnostic(
                    severity=Severity.WARNING,
                    vertex=v,
                    message="no enabled action; treated as losing for Eve",
                ))
            continue

        for a in enabled:
            covered = EMPTY
            for _, k in arena.out_edges(v, a):
                covered = covered | k
            missing = NATURALS - covered
            if missing:
                diagnostics.append(Diagnostic(
                    severity=Severity.ERROR,
                    vertex=v,
                    action=a,
                    message=f"incomplete: no successor for opponent counts {missing.format()}",
                ))

            diagnostics.extend(_partition_self_test(arena, v, a, sample_sets))

    if diagnostics:
        logger.info(
            "validate game=%s errors=%s warnings=%s",
            game.name,
            sum(d.severity == Severity.ERROR for d in diagnostics),
            sum(d.severity == Severity.WARNING for d in diagnostics),
        )
    return diagnostics


def _partition_self_test(
    arena: ParamArena, v: str, a: str, sample_sets: Iterable[IntervalSet]
) -> list[Diagnostic]:
    found: list[Diagnostic] = []
    blocks = arena.partition(v, a)

    union = EMPTY
    for i, (_, b1) in enumerate(blocks):
        for _, b2 in blocks[i + 1:]:
            if b1 & b2:
                found.append(Diagnostic(
                    severity=Severity.ERROR, vertex=v, action=a,
                    message=f"∇ blocks overlap on {(b1 & b2).format()}",
                ))
        union = union | b1
    if union != NATURALS:
        found.append(Diagnostic(
            severity=Severity.ERROR, vertex=v, action=a,
            message=f"∇ blocks do not cover {(NATURALS - union).format()}",
        ))

    if len(arena.successors(v, a)) <= _MAX_ENUMERATED_SUCCESSORS:
        by_members = dict(blocks)
        for members in arena.subsets_of_successors(v, a):
            direct = arena.nabla_subset(v, a, members)
            if direct != by_members.get(members, EMPTY):
                found.append(Diagnostic(
                    severity=Severity.ERROR, vertex=v, action=a,
                    message=f"∇(V') mismatch for V'={sorted(members)}",
                ))

    for k in sample_sets:
        rebuilt = EMPTY
        for _, block in blocks:
            rebuilt = rebuilt | (k & block)
        if rebuilt != k:
            found.append(Diagnostic(
                severity=Severity.ERROR, vertex=v, action=a,
                message=f"knowledge {k.format()!r} not recovered from its ∇ blocks",
            ))
            break
    return found


def require_valid(game: ReachGame) -> list[Diagnostic]:
    diagnostics = validate(game)
    for d in diagnostics:
        if d.severity == Severity.WARNING:
            logger.warning("%s", d.render())
    if any(d.severity == Severity.ERROR for d in diagnostics):
        raise ArenaValidationError(diagnostics)
    return diagnostics
