# paragame/controllers/symbolic_controller.py
"""
Antichain fixpoints for Eve's winning region in the knowledge game.

    W^0     = {(t, ℕ)} ∪ {(v, ∅) : v ≠ t}
    W^{i+1} = W^i ⊔ Pred(W^i)

solve_wk computes Pred over the finite knowledge lattice (descending its Hasse
diagram), solve_walt builds the predecessor sets directly from the
∇-partition of each action. Both produce the same sequence.
"""
from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from paragame.controllers import lattice_controller
from paragame.core.config import settings
from paragame.core.deadline import Deadline
from paragame.core.errors import MissingInitialVertexError, UnknownNameError
from paragame.core.intervalset import IntervalSet
from paragame.models.antichain import (
    SET_ORDER,
    KnowledgeAntichain,
    KnowledgeOrder,
    LatticeOrder,
    reduce_family,
)
from paragame.models.arena import ParamArena, ReachGame
from paragame.models.lattice import Lattice
from paragame.models.verdict import Algorithm, Verdict

logger = logging.getLogger(__name__)

KPred = Callable[[str, str, KnowledgeAntichain], set]


@dataclass
class FixpointTrace:
    game: ReachGame
    algorithm: Algorithm
    iterations: list[KnowledgeAntichain]
    # index i with W^i = W^{i-1}
    converged_at: int
    lattice: Optional[Lattice] = None
    evaluations: int = field(default=0)

    @property
    def final(self) -> KnowledgeAntichain:
        return self.iterations[-1]

    def region(self) -> KnowledgeAntichain:
        """Maximal elements of Eve's winning region."""
        return self.final

    def winning(self, v: str, knowledge: IntervalSet) -> bool:
        if not self.game.arena.has_vertex(v):
            raise UnknownNameError(f"unknown vertex {v!r}")
        return self.final.to_sets().dominated(v, knowledge)


# ─────────────────────────────────────────────
# Predecessor operators
# ─────────────────────────────────────────────
def kpred_k(lattice: Lattice, arena: ParamArena, v: str, a: str, W: KnowledgeAntichain) -> set[int]:
    """
    Maximal lattice elements K such that every successor v' is winning with K ∩ ∇(v,a,v').

    Qualifying sets are downward closed, so once a node qualifies its whole
    subDAG is skipped.
    """
    succ = [(w, lattice.id_of(k)) for w, k in arena.out_edges(v, a)]
    meet = lattice.meet

    def qualifies(node: int) -> bool:
        return all(W.dominated(w, meet(node, nid)) for w, nid in succ)

    emitted: list[int] = []
    seen = {lattice.top}
    stack = [lattice.top]
    while stack:
        node = stack.pop()
        if any(lattice.leq(node, e) for e in emitted):
            continue
        if qualifies(node):
            emitted.append(node)
            continue
        for c in lattice.children[node]:
            if c not in seen:
                seen.add(c)
                stack.append(c)

    return set(reduce_family(LatticeOrder(lattice), emitted))


def kpred_alt(arena: ParamArena, v: str, a: str, W: KnowledgeAntichain) -> set[Any]:
    """
    One result per witness family (a stored maximum K_v' of W at each
    successor v'):

        ⋃_{V'} ∇(v, a, V') ∩ ⋂_{v' ∈ V'} K_v'

    Knowledge is expressed in W's own backing (lattice ids or IntervalSets).
    ∅ is always part of the answer.
    """
    order = W.order
    successors = arena.successors(v, a)
    blocks = [(members, order.from_set(block)) for members, block in arena.partition(v, a)]

    results = {order.bottom}
    for witness in itertools.product(*(W.at(w) for w in successors)):
        chosen = dict(zip(successors, witness))
        acc = order.bottom
        for members, block in blocks:
            term = block
            for w in members:
                term = order.meet(term, chosen[w])
            acc = order.join(acc, term)
            if acc == order.top:
                break
        results.add(acc)
    return results


# ─────────────────────────────────────────────
# Fixpoint driver
# ─────────────────────────────────────────────
def _action_pairs(game: ReachGame) -> list[tuple[str, str]]:
    arena = game.arena
    return [(v, a) for v in arena.vertices if v != game.target for a in arena.enabled(v)]


def _iterate(
    game: ReachGame,
    order: KnowledgeOrder,
    kpred: KPred,
    *,
    algorithm: Algorithm,
    lattice: Optional[Lattice],
    keep_trace: Optional[bool],
    deadline: Optional[Deadline],
) -> FixpointTrace:
    keep_all = settings.TRACE_KEEP_ALL if keep_trace is None else keep_trace
    deadline = deadline or Deadline.unlimited()
    started = time.perf_counter()

    all_pairs = _action_pairs(game)
    rank = {pair: i for i, pair in enumerate(all_pairs)}
    preds: dict[str, set[tuple[str, str]]] = {}
    for v, a in all_pairs:
        for w in game.arena.successors(v, a):
            preds.setdefault(w, set()).add((v, a))

    current = KnowledgeAntichain.initial(order, game.vertices, game.target)
    iterations = [current]
    dirty = all_pairs
    evaluations = 0
    i = 0

    while True:
        deadline.check()
        produced = []
        for v, a in dirty:
            evaluations += 1
            produced.extend((v, k) for k in kpred(v, a, current))
        nxt = current.join(produced)
        i += 1

        iterations.append(nxt)
        if not keep_all and len(iterations) > 2:
            del iterations[0]

        changed = nxt.changed_vertices(current)
        logger.debug("iteration algorithm=%s i=%s dirty=%s changed=%s", algorithm.value, i, len(dirty), len(changed))
        if not changed:
            break
        dirty = sorted({p for w in changed for p in preds.get(w, ())}, key=rank.__getitem__)
        current = nxt

    logger.info(
        "fixpoint game=%s algorithm=%s converged_at=%s evaluations=%s ms=%.1f",
        game.name,
        algorithm.value,
        i,
        evaluations,
        (time.perf_counter() - started) * 1000,
    )
    return FixpointTrace(
        game=game,
        algorithm=algorithm,
        iterations=iterations,
        converged_at=i,
        lattice=lattice,
        evaluations=evaluations,
    )


def solve_wk(
    game: ReachGame,
    lattice: Optional[Lattice] = None,
    *,
    keep_trace: Optional[bool] = None,
    deadline: Optional[Deadline] = None,
) -> FixpointTrace:
    if lattice is None:
        lattice = lattice_controller.build(game, deadline=deadline)
    arena = game.arena
    return _iterate(
        game,
        LatticeOrder(lattice),
        lambda v, a, W: kpred_k(lattice, arena, v, a, W),
        algorithm=Algorithm.WK,
        lattice=lattice,
        keep_trace=keep_trace,
        deadline=deadline,
    )


def solve_walt(
    game: ReachGame,
    lattice: Optional[Lattice] = None,
    *,
    keep_trace: Optional[bool] = None,
    deadline: Optional[Deadline] = None,
) -> FixpointTrace:
    """Lattice-backed when `lattice` is given, otherwise directly on IntervalSets."""
    arena = game.arena
    order: KnowledgeOrder = LatticeOrder(lattice) if lattice is not None else SET_ORDER
    return _iterate(
        game,
        order,
        lambda v, a, W: kpred_alt(arena, v, a, W),
        algorithm=Algorithm.WALT,
        lattice=lattice,
        keep_trace=keep_trace,
        deadline=deadline,
    )


def resolve_start(game: ReachGame, v0: Optional[str]) -> str:
    start = v0 if v0 is not None else game.initial
    if start is None:
        raise MissingInitialVertexError("no start vertex: pass one or add an 'init' line")
    if not game.arena.has_vertex(start):
        raise UnknownNameError(f"unknown vertex {start!r}")
    return start


def verdict(game: ReachGame, v0: Optional[str], trace: FixpointTrace) -> Verdict:
    """Win iff (v0, ℕ) is stored in the final antichain."""
    start = resolve_start(game, v0)
    final = trace.final
    return Verdict.of(final.stores(start, final.order.top))
