# paragame/models/qbf.py

import enum
from dataclasses import dataclass

from paragame.core.errors import QdimacsError

Clause = tuple[int, ...]


class Quantifier(str, enum.Enum):
    EXISTS = "e"
    FORALL = "a"


@dataclass(frozen=True)
class QbfFormula:
    """
    Prenex CNF. Variables are numbered 1..n in prefix order, so
    prefix[i] quantifies variable i + 1.
    """

    quantifiers: tuple[Quantifier, ...]
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        n = len(self.quantifiers)
        for c in self.clauses:
            if not c:
                raise QdimacsError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > n:
                    raise QdimacsError(f"literal {lit} uses an unquantified variable")
                if -lit in c:
                    raise QdimacsError(f"tautological clause {list(c)}")

    @property
    def n(self) -> int:
        return len(self.quantifiers)

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def prefix(self) -> list[tuple[Quantifier, int]]:
        return [(q, i) for i, q in enumerate(self.quantifiers, start=1)]

    def quantifier(self, var: int) -> Quantifier:
        return self.quantifiers[var - 1]

    def satisfied_by(self, values: dict[int, bool]) -> bool:
        return all(any(values[abs(lit)] == (lit > 0) for lit in c) for c in self.clauses)
