# paragame/models/verdict.py

import enum


class Verdict(str, enum.Enum):
    WIN = "WIN"
    LOSE = "LOSE"

    @classmethod
    def of(cls, won: bool) -> "Verdict":
        return cls.WIN if won else cls.LOSE


class Algorithm(str, enum.Enum):
    WALT = "walt"
    WK = "wk"
    ATTRACTOR = "attractor"
    DFS = "dfs"


class Outcome(str, enum.Enum):
    WIN = "WIN"
    LOSE = "LOSE"
    TIMEOUT = "TIMEOUT"
