# paragame/models/arena.py
"""
Parameterized arenas: vertices, Eve's actions, and for every
(v, a, v') the set ∇(v, a, v') of opponent counts under which
action a at v may lead to v'. Missing triples mean ∅.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional

from paragame.core.errors import UnknownNameError
from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet

Edge = tuple[str, str, str]


class ParamArena:
    def __init__(
        self,
        vertices: Iterable[str],
        actions: Iterable[str],
        constraints: Mapping[Edge, IntervalSet],
    ):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.actions: tuple[str, ...] = tuple(actions)
        self._vertex_pos = {v: i for i, v in enumerate(self.vertices)}
        self._action_pos = {a: i for i, a in enumerate(self.actions)}

        if len(self._vertex_pos) != len(self.vertices):
            raise UnknownNameError("duplicate vertex name")
        if len(self._action_pos) != len(self.actions):
            raise UnknownNameError("duplicate action name")

        # insertion order is kept: format_arena writes edges back in this order
        self.constraints: dict[Edge, IntervalSet] = {}
        for (v, a, w), k in constraints.items():
            self._check_vertex(v)
            self._check_action(a)
            self._check_vertex(w)
            if k:
                self.constraints[(v, a, w)] = k

        # (v, a) -> [(v', ∇)] in vertex declaration order
        self._out: dict[tuple[str, str], list[tuple[str, IntervalSet]]] = {}
        for (v, a, w), k in self.constraints.items():
            self._out.setdefault((v, a), []).append((w, k))
        for succ in self._out.values():
            succ.sort(key=lambda item: self._vertex_pos[item[0]])

        self._partition_cache: dict[tuple[str, str], tuple[tuple[frozenset[str], IntervalSet], ...]] = {}

    # ─────────────────────────────────────────────
    # Name checks
    # ─────────────────────────────────────────────
    def _check_vertex(self, v: str) -> None:
        if v not in self._vertex_pos:
            raise UnknownNameError(f"unknown vertex {v!r}")

    def _check_action(self, a: str) -> None:
        if a not in self._action_pos:
            raise UnknownNameError(f"unknown action {a!r}")

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_pos

    # ─────────────────────────────────────────────
    # ∇ accessors
    # ─────────────────────────────────────────────
    def nabla(self, v: str, a: str, w: str) -> IntervalSet:
        self._check_vertex(v)
        self._check_action(a)
        self._check_vertex(w)
        return self.constraints.get((v, a, w), EMPTY)

    def enabled(self, v: str) -> tuple[str, ...]:
        self._check_vertex(v)
        return tuple(a for a in self.actions if (v, a) in self._out)

    def successors(self, v: str, a: str) -> tuple[str, ...]:
        self._check_vertex(v)
        self._check_action(a)
        return tuple(w for w, _ in self._out.get((v, a), ()))

    def out_edges(self, v: str, a: str) -> tuple[tuple[str, IntervalSet], ...]:
        return tuple(self._out.get((v, a), ()))

    def nabla_subset(self, v: str, a: str, targets: Iterable[str]) -> IntervalSet:
        """∇(v, a, V') = ⋂_{v' ∈ V'} ∇(v,a,v') minus ⋃_{v' ∉ V'} ∇(v,a,v')."""
        self._check_vertex(v)
        self._check_action(a)
        chosen = set(targets)
        for w in chosen:
            self._check_vertex(w)

        succ = dict(self._out.get((v, a), ()))
        # a non-successor in V' contributes ∇ = ∅ to the intersection
        if any(w not in succ for w in chosen):
            return EMPTY

        inside = NATURALS
        outside = EMPTY
        for w, k in succ.items():
            if w in chosen:
                inside = inside & k
            else:
                outside = outside | k
        return inside - outside

    def partition(self, v: str, a: str) -> tuple[tuple[frozenset[str], IntervalSet], ...]:
        """
        Non-empty blocks (V', ∇(v, a, V')) for V' ranging over subsets of
        successors(v, a). Built by refinement, one successor at a time,
        instead of enumerating all 2^|successors| subsets.
        """
        key = (v, a)
        cached = self._partition_cache.get(key)
        if cached is not None:
            return cached

        blocks: list[tuple[frozenset[str], IntervalSet]] = [(frozenset(), NATURALS)]
        for w, k in self._out.get(key, ()):
            refined = []
            for members, block in blocks:
                hit = block & k
                miss = block - k
                if hit:
                    refined.append((members | {w}, hit))
                if miss:
                    refined.append((members, miss))
            blocks = refined

        result = tuple(blocks)
        self._partition_cache[key] = result
        return result

    def subsets_of_successors(self, v: str, a: str) -> Iterator[frozenset[str]]:
        succ = self.successors(v, a)
        for r in range(len(succ) + 1):
            for combo in combinations(succ, r):
                yield frozenset(combo)

    # ─────────────────────────────────────────────
    # Whole-arena views
    # ─────────────────────────────────────────────
    def generators(self) -> list[IntervalSet]:
        """Distinct non-empty constraints, first-appearance order."""
        seen: dict[IntervalSet, None] = {}
        for k in self.constraints.values():
            seen.setdefault(k, None)
        return list(seen)

    def is_deterministic(self) -> bool:
        for v in self.vertices:
            for a in self.enabled(v):
                for members, _ in self.partition(v, a):
                    if len(members) > 1:
                        return False
        return True

    def edge_count(self) -> int:
        return len(self.constraints)


@dataclass
class ReachGame:
    arena: ParamArena
    target: str
    initial: Optional[str] = None
    name: str = field(default="game")

    def __post_init__(self) -> None:
        if not self.arena.has_vertex(self.target):
            raise UnknownNameError(f"target {self.target!r} is not a vertex")
        if self.initial is not None and not self.arena.has_vertex(self.initial):
            raise UnknownNameError(f"initial vertex {self.initial!r} is not a vertex")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.arena.vertices
