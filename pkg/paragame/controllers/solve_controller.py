# paragame/controllers/solve_controller.py
from __future__ import annotations

import logging
from typing import Optional

from paragame.controllers import explicit_controller, symbolic_controller
from paragame.core.deadline import Deadline
from paragame.models.arena import ReachGame
from paragame.models.lattice import Lattice
from paragame.models.verdict import Algorithm, Verdict

logger = logging.getLogger(__name__)


def solve_game(
    game: ReachGame,
    algorithm: Algorithm | str = Algorithm.WALT,
    start: Optional[str] = None,
    *,
    lattice: Optional[Lattice] = None,
    deadline: Optional[Deadline] = None,
) -> Verdict:
    """Verdict from `start` (default: the game's `init`) with the chosen algorithm."""
    algorithm = Algorithm(algorithm)
    v0 = symbolic_controller.resolve_start(game, start)

    if algorithm == Algorithm.WK:
        trace = symbolic_controller.solve_wk(game, lattice, keep_trace=False, deadline=deadline)
        result = symbolic_controller.verdict(game, v0, trace)
    elif algorithm == Algorithm.WALT:
        trace = symbolic_controller.solve_walt(game, lattice, keep_trace=False, deadline=deadline)
        result = symbolic_controller.verdict(game, v0, trace)
    elif algorithm == Algorithm.ATTRACTOR:
        result = explicit_controller.explicit_solve(game, v0, deadline=deadline)
    else:
        result = explicit_controller.dfs_solve(game, v0, deadline=deadline)

    logger.info("solve game=%s algorithm=%s start=%s verdict=%s", game.name, algorithm.value, v0, result.value)
    return result
