# paragame/routes/qbf.py

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from paragame.controllers import qbf_controller
from paragame.models.verdict import Verdict
from paragame.schemas.games import QbfSolveOut, QbfSolveRequest

router = APIRouter(prefix="/qbf", tags=["QBF"])


@router.post("/solve", response_model=QbfSolveOut)
async def solve_qbf(payload: QbfSolveRequest):
    formula = qbf_controller.parse_qdimacs(payload.qdimacs)
    value = await run_in_threadpool(qbf_controller.solve_formula, formula, payload.algorithm)
    return QbfSolveOut(
        value=value,
        verdict=None if payload.algorithm == qbf_controller.BRUTE else Verdict.of(value),
        algorithm=payload.algorithm,
        variables=formula.n,
        clauses=formula.m,
    )
