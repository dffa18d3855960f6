# paragame/controllers/lattice_controller.py
from __future__ import annotations

import logging
import time
from typing import Iterable, Optional, Sequence

from paragame.core.config import settings
from paragame.core.deadline import Deadline
from paragame.core.errors import LatticeCapExceeded
from paragame.core.intervalset import NATURALS, IntervalSet
from paragame.models.arena import ParamArena, ReachGame
from paragame.models.lattice import Lattice
from paragame.schemas.games import LatticeStats

logger = logging.getLogger(__name__)


def compute_atoms(generators: Iterable[IntervalSet]) -> list[IntervalSet]:
    """Blocks of the coarsest partition of ℕ that every generator is a union of."""
    blocks = [NATURALS]
    for g in generators:
        refined = []
        for b in blocks:
            hit, miss = b & g, b - g
            if hit:
                refined.append(hit)
            if miss:
                refined.append(miss)
        blocks = refined
    return sorted(blocks, key=IntervalSet.sort_key)


def build(
    source: ParamArena | ReachGame,
    *,
    cap: Optional[int] = None,
    deadline: Optional[Deadline] = None,
    seeds: Optional[Sequence[IntervalSet]] = None,
) -> Lattice:
    """
    Least family containing ℕ, ∅ and every ∇(v, a, v'), closed under union
    and difference (hence intersection, K ∩ K' = K minus (K minus K')).

    `seeds` overrides the insertion order of the generators; the resulting
    element set does not depend on it.
    """
    arena = source.arena if isinstance(source, ReachGame) else source
    cap = settings.LATTICE_MAX_ELEMENTS if cap is None else cap
    deadline = deadline or Deadline.unlimited()
    started = time.perf_counter()

    generators = list(seeds) if seeds is not None else arena.generators()
    lattice = Lattice(compute_atoms(generators))

    def _check_cap() -> None:
        if len(lattice) > cap:
            logger.warning("lattice cap hit size=%s cap=%s", len(lattice), cap)
            raise LatticeCapExceeded(len(lattice), cap)

    for g in generators:
        lattice.insert(g)
        _check_cap()

    # worklist closure: element i is combined once with every j < i;
    # elements appended meanwhile are reached later by the same loop
    masks = lattice.masks
    mask_index = lattice.mask_index
    i = 0
    while i < len(lattice):
        deadline.check()
        mi = masks[i]
        for j in range(i):
            mj = masks[j]
            for m in (mi | mj, mi & ~mj, mj & ~mi):
                if m not in mask_index:
                    lattice.insert(lattice.decode(m), mask=m)
                    _check_cap()
        i += 1

    lattice.freeze()
    logger.info(
        "lattice built size=%s atoms=%s generators=%s ms=%.1f",
        len(lattice),
        len(lattice.atoms or ()),
        len(generators),
        (time.perf_counter() - started) * 1000,
    )
    return lattice


def stats(lattice: Lattice, source: ParamArena | ReachGame | None = None) -> LatticeStats:
    generators = None
    if source is not None:
        arena = source.arena if isinstance(source, ReachGame) else source
        generators = len(arena.generators())
    return LatticeStats(
        size=len(lattice),
        height=lattice.height(),
        generators=generators,
        atoms=len(lattice.atoms) if lattice.atoms is not None else None,
    )


def dump(lattice: Lattice) -> str:
    """One line per element: id, set text, parents, children (tab separated)."""
    lines = []
    for i, k in enumerate(lattice.elements):
        parents = ",".join(str(p) for p in sorted(lattice.parents[i]))
        children = ",".join(str(c) for c in sorted(lattice.children[i]))
        lines.append(f"{i}\t{k.format()}\t{parents}\t{children}")
    return "\n".join(lines) + "\n"
