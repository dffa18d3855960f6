# paragame/routes/games.py

from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool

from paragame.controllers import arena_controller, lattice_controller, symbolic_controller
from paragame.controllers.solve_controller import solve_game
from paragame.core.deadline import Deadline
from paragame.models.antichain import KnowledgeAntichain
from paragame.models.verdict import Algorithm
from paragame.schemas.games import (
    GameIn,
    LatticeOut,
    RegionEntry,
    RegionOut,
    RegionRequest,
    SolveOut,
    SolveRequest,
)

# no /api here because main.py already adds /api
router = APIRouter(prefix="/games", tags=["Games"])


def _entries(antichain: KnowledgeAntichain) -> list[RegionEntry]:
    return [RegionEntry(vertex=v, knowledge=ks) for v, ks in antichain.as_text_map().items()]


# ─────────────────────────────────────────────────────────────
# Verdict
# ─────────────────────────────────────────────────────────────
@router.post("/solve", response_model=SolveOut)
async def solve(payload: SolveRequest):
    game = arena_controller.parse_arena(payload.arena)
    diagnostics = arena_controller.require_valid(game)
    start = symbolic_controller.resolve_start(game, payload.start)

    verdict = await run_in_threadpool(
        solve_game, game, payload.algorithm, start, deadline=Deadline(payload.timeout_seconds)
    )
    return SolveOut(verdict=verdict, start=start, algorithm=payload.algorithm, diagnostics=diagnostics)


# ─────────────────────────────────────────────────────────────
# Winning region
# ─────────────────────────────────────────────────────────────
@router.post("/region", response_model=RegionOut)
async def region(payload: RegionRequest):
    if payload.algorithm not in (Algorithm.WALT, Algorithm.WK):
        raise HTTPException(status_code=400, detail="region needs a symbolic algorithm (walt or wk)")

    game = arena_controller.parse_arena(payload.arena)
    arena_controller.require_valid(game)
    solver = symbolic_controller.solve_wk if payload.algorithm == Algorithm.WK else symbolic_controller.solve_walt
    trace = await run_in_threadpool(solver, game, keep_trace=payload.trace)

    return RegionOut(
        algorithm=payload.algorithm,
        converged_at=trace.converged_at,
        region=_entries(trace.region()),
        trace=[_entries(w) for w in trace.iterations] if payload.trace else [],
    )


# ─────────────────────────────────────────────────────────────
# Lattice
# ─────────────────────────────────────────────────────────────
@router.post("/lattice", response_model=LatticeOut)
async def lattice(payload: GameIn):
    game = arena_controller.parse_arena(payload.arena)
    built = await run_in_threadpool(lattice_controller.build, game)
    return LatticeOut(
        stats=lattice_controller.stats(built, game),
        elements=[k.format() for k in built.elements],
    )
