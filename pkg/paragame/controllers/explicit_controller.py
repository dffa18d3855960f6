# paragame/controllers/explicit_controller.py
"""
Explicit solving on the knowledge game: full construction of the part
reachable from (v0, ℕ) followed by an attractor, and the sub-game DFS that
only explores nodes sharing the current knowledge and recurses on the
nodes where knowledge strictly shrinks.
"""
from __future__ import annotations

import logging
import time
from collections import deque
from typing import Iterable, Optional

from paragame.controllers.symbolic_controller import resolve_start
from paragame.core.deadline import Deadline
from paragame.core.intervalset import NATURALS, IntervalSet
from paragame.models.arena import ReachGame
from paragame.models.knowledge_game import AdamNode, EveNode, KnowledgeGame, Node
from paragame.models.verdict import Verdict

logger = logging.getLogger(__name__)


# ---------------------------
# Construction
# ---------------------------

def build_reachable(
    game: ReachGame,
    v0: Optional[str] = None,
    knowledge: IntervalSet = NATURALS,
    *,
    deadline: Optional[Deadline] = None,
) -> KnowledgeGame:
    """BFS from (v0, knowledge); target nodes are not expanded."""
    start = resolve_start(game, v0)
    deadline = deadline or Deadline.unlimited()
    arena = game.arena

    root = EveNode(start, knowledge)
    kg = KnowledgeGame(root, game.target)
    queue = deque([root])
    while queue:
        deadline.check()
        node = queue.popleft()
        if kg.is_target(node):
            continue
        for a in arena.enabled(node.vertex):
            adam = AdamNode(node.vertex, node.knowledge, a)
            kg.add_adam(adam)
            kg.add_edge(node, adam)
            for w, nabla in arena.out_edges(node.vertex, a):
                refined = node.knowledge & nabla
                if not refined:
                    continue
                nxt = EveNode(w, refined)
                if kg.add_eve(nxt):
                    queue.append(nxt)
                kg.add_edge(adam, nxt)

    logger.debug(
        "knowledge game built game=%s start=%s eve=%s adam=%s",
        game.name, start, len(kg.eve_nodes), len(kg.adam_nodes),
    )
    return kg


# ---------------------------
# Attractor
# ---------------------------

def attractor_region(
    kg: KnowledgeGame,
    extra_targets: Iterable[Node] = (),
    *,
    deadline: Optional[Deadline] = None,
) -> set[Node]:
    """
    Nodes from which Eve forces a visit to a target node: an Eve node needs
    one winning successor, an Adam node needs all of them.
    """
    deadline = deadline or Deadline.unlimited()
    preds = kg.predecessors()
    remaining = {n: len(kg.successors(n)) for n in kg.adam_nodes}

    won: set[Node] = set()
    queue: deque[Node] = deque()
    for node in [*kg.targets, *extra_targets, *(n for n, c in remaining.items() if c == 0)]:
        if node not in won:
            won.add(node)
            queue.append(node)

    while queue:
        deadline.check()
        node = queue.popleft()
        for p in preds[node]:
            if p in won:
                continue
            if isinstance(p, AdamNode):
                remaining[p] -= 1
                if remaining[p] > 0:
                    continue
            won.add(p)
            queue.append(p)
    return won


def attractor_solve(
    kg: KnowledgeGame,
    start: Optional[EveNode] = None,
    *,
    deadline: Optional[Deadline] = None,
) -> Verdict:
    node = kg.root if start is None else start
    return Verdict.of(node in attractor_region(kg, deadline=deadline))


def explicit_solve(
    game: ReachGame,
    v0: Optional[str] = None,
    knowledge: IntervalSet = NATURALS,
    *,
    deadline: Optional[Deadline] = None,
) -> Verdict:
    kg = build_reachable(game, v0, knowledge, deadline=deadline)
    return attractor_solve(kg, deadline=deadline)


# ---------------------------
# Sub-game DFS
# ---------------------------

class DfsSolver:
    """
    Memoized on (v, K). A sub-game holds the nodes reachable from its root
    without refining K; nodes with strictly smaller knowledge are exits,
    solved recursively when first discovered.
    """

    def __init__(self, game: ReachGame, *, deadline: Optional[Deadline] = None):
        self.game = game
        self.deadline = deadline or Deadline.unlimited()
        self.memo: dict[EveNode, bool] = {}
        self.subgames = 0
        self.max_depth = 0

    def solve(self, v0: Optional[str] = None, knowledge: IntervalSet = NATURALS) -> Verdict:
        start = resolve_start(self.game, v0)
        started = time.perf_counter()
        won = self.status(EveNode(start, knowledge))
        logger.info(
            "dfs game=%s start=%s subgames=%s max_depth=%s memo=%s ms=%.1f",
            self.game.name, start, self.subgames, self.max_depth, len(self.memo),
            (time.perf_counter() - started) * 1000,
        )
        return Verdict.of(won)

    def status(self, node: EveNode) -> bool:
        return self._status(node, 1)

    def _status(self, root: EveNode, depth: int) -> bool:
        cached = self.memo.get(root)
        if cached is not None:
            return cached
        self.deadline.check()
        self.subgames += 1
        self.max_depth = max(self.max_depth, depth)

        arena = self.game.arena
        k = root.knowledge
        sub = KnowledgeGame(root, self.game.target)
        winning_leaves: list[EveNode] = []

        stack = [root]
        while stack:
            self.deadline.check()
            node = stack.pop()
            if sub.is_target(node):
                continue
            if node != root and node in self.memo:
                if self.memo[node]:
                    winning_leaves.append(node)
                continue
            for a in arena.enabled(node.vertex):
                adam = AdamNode(node.vertex, k, a)
                sub.add_adam(adam)
                sub.add_edge(node, adam)
                for w, nabla in arena.out_edges(node.vertex, a):
                    refined = k & nabla
                    if not refined:
                        continue
                    nxt = EveNode(w, refined)
                    is_new = sub.add_eve(nxt)
                    sub.add_edge(adam, nxt)
                    if not is_new:
                        continue
                    if refined == k:
                        stack.append(nxt)
                    elif self._status(nxt, depth + 1):
                        winning_leaves.append(nxt)

        won = attractor_region(sub, winning_leaves, deadline=self.deadline)
        for n in sub.eve_nodes:
            if n.knowledge == k and n not in self.memo:
                self.memo[n] = n in won
        return self.memo[root]


def dfs_solve(game: ReachGame, v0: Optional[str] = None, *, deadline: Optional[Deadline] = None) -> Verdict:
    return DfsSolver(game, deadline=deadline).solve(v0)
