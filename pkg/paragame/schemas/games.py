# paragame/schemas/games.py

from typing import Optional

from pydantic import BaseModel, Field

from paragame.models.verdict import Algorithm, Verdict
from paragame.schemas.diagnostics import Diagnostic


class LatticeStats(BaseModel):
    size: int
    height: int
    generators: Optional[int] = None
    atoms: Optional[int] = None


class GameIn(BaseModel):
    arena: str = Field(min_length=1, description="Arena file contents")


class SolveRequest(GameIn):
    algorithm: Algorithm = Algorithm.WALT
    start: Optional[str] = Field(default=None, description="Overrides the `init` line")
    timeout_seconds: Optional[float] = Field(default=None, gt=0)


class SolveOut(BaseModel):
    verdict: Verdict
    start: str
    algorithm: Algorithm
    diagnostics: list[Diagnostic] = []


class RegionRequest(GameIn):
    algorithm: Algorithm = Algorithm.WALT
    trace: bool = False


class RegionEntry(BaseModel):
    vertex: str
    knowledge: list[str]


class RegionOut(BaseModel):
    algorithm: Algorithm
    converged_at: int
    region: list[RegionEntry]
    trace: list[list[RegionEntry]] = []


class LatticeOut(BaseModel):
    stats: LatticeStats
    elements: list[str] = []


class QbfSolveRequest(BaseModel):
    qdimacs: str = Field(min_length=1)
    algorithm: str = Field(default="walt", pattern="^(walt|wk|attractor|dfs|brute)$")


class QbfSolveOut(BaseModel):
    value: bool
    verdict: Optional[Verdict] = None
    algorithm: str
    variables: int
    clauses: int
