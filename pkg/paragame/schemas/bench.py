# paragame/schemas/bench.py

from typing import Optional

from pydantic import BaseModel

from paragame.models.verdict import Algorithm, Outcome


class BenchRecord(BaseModel):
    name: str
    family: str
    n: Optional[int] = None
    variables: Optional[int] = None
    clauses: Optional[int] = None
    algorithm: Algorithm
    outcome: Outcome
    lattice_size: Optional[int] = None
    lattice_seconds: Optional[float] = None
    solve_seconds: Optional[float] = None
    total_seconds: Optional[float] = None
    iterations: Optional[int] = None
