# paragame/controllers/qbf_controller.py
"""
QDIMACS front-end, a brute-force evaluator, a seeded random generator and
the reduction of prenex-CNF QBF to parameterized reachability games.

Reduction (opponent count k ∈ [1, m] names a challenged clause, k > m
means no challenge):

    u_i  --setT/ℕ--> ci_T, u_i --setF/ℕ--> ci_F      (x_i existential)
    u_i  --pick/ℕ--> ci_T and ci_F                      (x_i universal)
    ci_b --chk/D--> t, ci_b --chk/ℕ\\D--> next        (D: clauses made true by x_i = b)
    f    --fin/>m--> t, f --fin/1-m--> s
    s    --stay/ℕ--> s

Eve wins from u_1 iff the formula is true.
"""
from __future__ import annotations

import logging
import random
from pathlib import Path
from typing import Optional

from paragame.controllers.solve_controller import solve_game
from paragame.core.config import settings
from paragame.core.deadline import Deadline
from paragame.core.errors import GeneratorError, GuardExceeded, InputError, QdimacsError
from paragame.core.intervalset import NATURALS, IntervalSet
from paragame.models.arena import Edge, ParamArena, ReachGame
from paragame.models.qbf import Clause, QbfFormula, Quantifier
from paragame.models.verdict import Verdict

logger = logging.getLogger(__name__)

BRUTE = "brute"


# ---------------------------
# QDIMACS
# ---------------------------

def parse_qdimacs(text: str) -> QbfFormula:
    header: Optional[tuple[int, int]] = None
    order: list[int] = []
    quantifiers: dict[int, Quantifier] = {}
    raw_clauses: list[tuple[list[int], int]] = []
    pending: list[int] = []
    pending_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()

        if tokens[0] == "p":
            if header is not None:
                raise QdimacsError("duplicate header", lineno)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise QdimacsError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise QdimacsError("header counts must be integers", lineno) from None
            continue

        if header is None:
            raise QdimacsError("content before the 'p cnf' header", lineno)

        if tokens[0] in ("e", "a"):
            if raw_clauses or pending:
                raise QdimacsError("quantifier line after the first clause", lineno)
            if tokens[-1] != "0":
                raise QdimacsError("quantifier line must end with 0", lineno)
            q = Quantifier(tokens[0])
            for tok in tokens[1:-1]:
                var = _int_token(tok, lineno)
                if var <= 0 or var > header[0]:
                    raise QdimacsError(f"variable {var} out of range 1..{header[0]}", lineno)
                if var in quantifiers:
                    raise QdimacsError(f"variable {var} quantified twice", lineno)
                quantifiers[var] = q
                order.append(var)
            continue

        for tok in tokens:
            lit = _int_token(tok, lineno)
            if not pending:
                pending_line = lineno
            if lit == 0:
                if not pending:
                    raise QdimacsError("empty clause", lineno)
                raw_clauses.append((pending, pending_line))
                pending = []
            else:
                pending.append(lit)

    if header is None:
        raise QdimacsError("missing 'p cnf' header")
    if pending:
        raise QdimacsError("last clause is not terminated by 0", pending_line)
    if len(raw_clauses) != header[1]:
        logger.warning("qdimacs header declares clauses=%s, found=%s", header[1], len(raw_clauses))

    renumber = {var: i for i, var in enumerate(order, start=1)}
    clauses: list[Clause] = []
    for lits, lineno in raw_clauses:
        mapped: dict[int, None] = {}
        for lit in lits:
            var = renumber.get(abs(lit))
            if var is None:
                raise QdimacsError(f"variable {abs(lit)} is not quantified", lineno)
            mapped.setdefault(var if lit > 0 else -var, None)
        if any(-lit in mapped for lit in mapped):
            raise QdimacsError("tautological clause", lineno)
        clauses.append(tuple(mapped))

    return QbfFormula(tuple(quantifiers[v] for v in order), tuple(clauses))


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise QdimacsError(f"not an integer: {tok!r}", lineno) from None


def format_qdimacs(f: QbfFormula) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    block: list[int] = []
    current: Optional[Quantifier] = None
    for q, var in f.prefix:
        if q != current and block:
            lines.append(f"{current.value} {' '.join(map(str, block))} 0")
            block = []
        current = q
        block.append(var)
    if block:
        lines.append(f"{current.value} {' '.join(map(str, block))} 0")
    for c in f.clauses:
        lines.append(" ".join(map(str, c)) + " 0")
    return "\n".join(lines) + "\n"


def read_qdimacs(path: str | Path) -> QbfFormula:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {p}: {e.strerror or e}") from e
    return parse_qdimacs(text)


# ---------------------------
# Oracle
# ---------------------------

def brute_eval(f: QbfFormula, *, max_vars: Optional[int] = None) -> bool:
    limit = settings.QBF_BRUTE_MAX_VARS if max_vars is None else max_vars
    if f.n > limit:
        raise GuardExceeded(f"brute-force evaluation limited to {limit} variables (formula has {f.n})")

    values: dict[int, bool] = {}

    def evaluate(var: int) -> bool:
        if var > f.n:
            return f.satisfied_by(values)
        exists = f.quantifier(var) == Quantifier.EXISTS
        for b in (True, False):
            values[var] = b
            r = evaluate(var + 1)
            if exists and r:
                return True
            if not exists and not r:
                return False
        return not exists

    return evaluate(1)


# ---------------------------
# Generator
# ---------------------------

def gen_random(n: int, m: int, width: int, seed: int) -> QbfFormula:
    """Alternating prefix ∃x1 ∀x2 ∃x3 ...; clauses over `width` distinct variables."""
    if n < 1 or m < 1:
        raise GeneratorError("need n >= 1 and m >= 1")
    if not 1 <= width <= n:
        raise GeneratorError(f"clause width must be in 1..{n}, got {width}")

    rng = random.Random(seed)
    quantifiers = tuple(Quantifier.EXISTS if i % 2 == 0 else Quantifier.FORALL for i in range(n))
    clauses = []
    for _ in range(m):
        chosen = sorted(rng.sample(range(1, n + 1), width))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chosen))
    return QbfFormula(quantifiers, tuple(clauses))


# ---------------------------
# Reduction
# ---------------------------

def _discharged(f: QbfFormula, var: int, value: bool) -> IntervalSet:
    lit = var if value else -var
    return IntervalSet.of(i for i, c in enumerate(f.clauses, start=1) if lit in c)


def reduce_to_game(f: QbfFormula, *, name: str = "qbf") -> ReachGame:
    n, m = f.n, f.m
    challenged = IntervalSet.closed(1, m)
    unchallenged = IntervalSet.at_least(m + 1)

    def u(i: int) -> str:
        return f"u{i}" if i <= n else "f"

    vertices = [u(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        vertices += [f"c{i}T", f"c{i}F"]
    vertices += ["f", "s", "t"]

    edges: dict[Edge, IntervalSet] = {}
    for i, q in enumerate(f.quantifiers, start=1):
        if q == Quantifier.EXISTS:
            edges[(u(i), "setT", f"c{i}T")] = NATURALS
            edges[(u(i), "setF", f"c{i}F")] = NATURALS
        else:
            edges[(u(i), "pick", f"c{i}T")] = NATURALS
            edges[(u(i), "pick", f"c{i}F")] = NATURALS
        for value, tag in ((True, "T"), (False, "F")):
            d = _discharged(f, i, value)
            if d:
                edges[(f"c{i}{tag}", "chk", "t")] = d
            edges[(f"c{i}{tag}", "chk", u(i + 1))] = NATURALS - d

    edges[("f", "fin", "t")] = unchallenged
    edges[("f", "fin", "s")] = challenged
    edges[("s", "stay", "s")] = NATURALS

    arena = ParamArena(vertices, ["setT", "setF", "pick", "chk", "fin", "stay"], edges)
    return ReachGame(arena=arena, target="t", initial=u(1), name=name)


def solve_formula(
    f: QbfFormula,
    algorithm: Optional[str] = None,
    *,
    deadline: Optional[Deadline] = None,
) -> bool:
    """Truth value of `f`, by brute force or by solving the reduced game."""
    algorithm = algorithm or settings.QBF_DEFAULT_ALGORITHM
    if algorithm == BRUTE:
        return brute_eval(f)
    game = reduce_to_game(f)
    return solve_game(game, algorithm, deadline=deadline) == Verdict.WIN
