# paragame/cli.py
"""
Command-line front-end.

    paragame solve   FILE [--algo walt|wk|attractor|dfs] [--from V] [--timeout S]
    paragame region  FILE [--algo walt|wk] [--trace]
    paragame lattice FILE [--dump]
    paragame kgame   FILE [--from V] [--dot] [-o OUT]
    paragame qbf gen -n N -m M [--width W] [--seed S] [-o OUT]
    paragame qbf solve FILE [--algo walt|wk|attractor|dfs|brute]
    paragame qbf reduce FILE [-o OUT]
    paragame gen FAMILY -n N [-o OUT]          (FAMILY may be "random" with --seed)
    paragame bench [--families ...] [--n 2..8] [--algos ...] [--timeout S] [--csv OUT]

Results go to stdout, logs and errors to stderr. Exit codes: 0 success
(whatever the verdict), 2 bad input, 3 timeout or size cap.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

# before paragame.core.config builds its settings
load_dotenv()

from pydantic import ValidationError

from paragame import __version__
from paragame.controllers import (
    arena_controller,
    bench_controller,
    explicit_controller,
    lattice_controller,
    qbf_controller,
    symbolic_controller,
)
from paragame.controllers.solve_controller import solve_game
from paragame.core.config import settings
from paragame.core.deadline import Deadline
from paragame.core.errors import InputError, ParaGameError
from paragame.models.verdict import Algorithm
from paragame.schemas.cli import CliConfig

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"
ALGORITHMS = [a.value for a in Algorithm]


# ---------------------------
# Helpers
# ---------------------------

def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level_value, logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _parse_range(text: str) -> list[int]:
    """'5' or '2..8' (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return values


def _parse_algos(text: str) -> list[Algorithm]:
    try:
        return [Algorithm(a.strip()) for a in text.split(",") if a.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"algorithms must be among {','.join(ALGORITHMS)}") from None


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    p = Path(output)
    try:
        p.write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {p}: {e.strerror or e}") from e
    logger.info("wrote path=%s bytes=%s", p, len(text.encode("utf-8")))


def _algorithm(cfg: CliConfig) -> Algorithm:
    return cfg.algorithm or Algorithm(settings.DEFAULT_ALGORITHM)


# ---------------------------
# Commands
# ---------------------------

def cmd_solve(cfg: CliConfig, args: argparse.Namespace) -> int:
    game = arena_controller.load_game(cfg.input)
    verdict = solve_game(game, _algorithm(cfg), cfg.start, deadline=Deadline(cfg.timeout))
    print(verdict.value)
    return 0


def cmd_region(cfg: CliConfig, args: argparse.Namespace) -> int:
    algorithm = _algorithm(cfg)
    if algorithm not in (Algorithm.WALT, Algorithm.WK):
        raise InputError("region needs a symbolic algorithm (walt or wk)")
    game = arena_controller.load_game(cfg.input)
    deadline = Deadline(cfg.timeout)
    if algorithm == Algorithm.WK:
        trace = symbolic_controller.solve_wk(game, keep_trace=args.trace, deadline=deadline)
    else:
        trace = symbolic_controller.solve_walt(game, keep_trace=args.trace, deadline=deadline)

    if args.trace:
        chunks = [f"# W^{i}\n{w.format()}" for i, w in enumerate(trace.iterations)]
        _emit("".join(chunks), cfg.output)
    else:
        _emit(trace.region().format(), cfg.output)
    return 0


def cmd_lattice(cfg: CliConfig, args: argparse.Namespace) -> int:
    game = arena_controller.load_game(cfg.input)
    lattice = lattice_controller.build(game, deadline=Deadline(cfg.timeout))
    if args.dump:
        _emit(lattice_controller.dump(lattice), cfg.output)
    else:
        s = lattice_controller.stats(lattice, game)
        _emit(f"size {s.size}\nheight {s.height}\natoms {s.atoms}\ngenerators {s.generators}\n", cfg.output)
    return 0


def cmd_kgame(cfg: CliConfig, args: argparse.Namespace) -> int:
    game = arena_controller.load_game(cfg.input)
    kg = explicit_controller.build_reachable(game, cfg.start, deadline=Deadline(cfg.timeout))
    if args.dot:
        _emit(kg.to_dot(), cfg.output)
    else:
        verdict = explicit_controller.attractor_solve(kg)
        _emit(
            f"eve_nodes {len(kg.eve_nodes)}\nadam_nodes {len(kg.adam_nodes)}\n"
            f"edges {kg.edge_count()}\nverdict {verdict.value}\n",
            cfg.output,
        )
    return 0


def cmd_qbf(cfg: CliConfig, args: argparse.Namespace) -> int:
    if cfg.subcommand == "gen":
        f = qbf_controller.gen_random(args.n, args.m, args.width, cfg.seed)
        _emit(qbf_controller.format_qdimacs(f), cfg.output)
    elif cfg.subcommand == "solve":
        f = qbf_controller.read_qdimacs(cfg.input)
        value = qbf_controller.solve_formula(f, args.algo, deadline=Deadline(cfg.timeout))
        print("TRUE" if value else "FALSE")
    else:
        f = qbf_controller.read_qdimacs(cfg.input)
        game = qbf_controller.reduce_to_game(f, name=Path(cfg.input).stem)
        _emit(arena_controller.format_arena(game), cfg.output)
    return 0


def cmd_gen(cfg: CliConfig, args: argparse.Namespace) -> int:
    if args.family == "random":
        game = bench_controller.random_arena(cfg.seed)
    else:
        if args.n is None:
            raise InputError("gen needs -n for family arenas")
        game = bench_controller.gen_family(args.family, args.n)
    _emit(arena_controller.format_arena(game), cfg.output)
    return 0


def cmd_bench(cfg: CliConfig, args: argparse.Namespace) -> int:
    instances = bench_controller.family_instances(args.families, args.n)
    if args.qbf_vars:
        instances += bench_controller.qbf_instances(args.qbf_vars, args.qbf_clauses, cfg.seed)
    if args.random:
        instances += bench_controller.random_instances(args.random, cfg.seed)

    timeout = cfg.timeout if cfg.timeout is not None else settings.BENCH_TIMEOUT_SECONDS
    records = bench_controller.run_bench(instances, args.algos, timeout=timeout, workers=args.workers)

    if cfg.csv:
        bench_controller.write_csv(records, cfg.csv)
    else:
        bench_controller.write_wide(records, sys.stdout)
    if args.records_csv:
        bench_controller.write_records_csv(records, args.records_csv)
    return 0


# ---------------------------
# Parser
# ---------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paragame", description="Parameterized reachability games")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="print WIN or LOSE for the start vertex")
    s.add_argument("input")
    s.add_argument("--algo", choices=ALGORITHMS)
    s.add_argument("--from", dest="start")
    s.add_argument("--timeout", type=float)
    s.set_defaults(handler=cmd_solve)

    s = sub.add_parser("region", help="print the maximal winning (vertex, knowledge) pairs")
    s.add_argument("input")
    s.add_argument("--algo", choices=[Algorithm.WALT.value, Algorithm.WK.value])
    s.add_argument("--trace", action="store_true", help="print every iteration")
    s.add_argument("--timeout", type=float)
    s.add_argument("-o", "--output")
    s.set_defaults(handler=cmd_region)

    s = sub.add_parser("lattice", help="build the knowledge lattice of an arena")
    s.add_argument("input")
    s.add_argument("--dump", action="store_true", help="one line per element with its covers")
    s.add_argument("--timeout", type=float)
    s.add_argument("-o", "--output")
    s.set_defaults(handler=cmd_lattice)

    s = sub.add_parser("kgame", help="build the reachable knowledge game")
    s.add_argument("input")
    s.add_argument("--from", dest="start")
    s.add_argument("--dot", action="store_true")
    s.add_argument("--timeout", type=float)
    s.add_argument("-o", "--output")
    s.set_defaults(handler=cmd_kgame)

    q = sub.add_parser("qbf", help="QBF generation, solving and reduction")
    qsub = q.add_subparsers(dest="subcommand", required=True)
    s = qsub.add_parser("gen")
    s.add_argument("-n", type=int, required=True, help="variables")
    s.add_argument("-m", type=int, required=True, help="clauses")
    s.add_argument("--width", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s = qsub.add_parser("solve")
    s.add_argument("input")
    s.add_argument("--algo", choices=[*ALGORITHMS, qbf_controller.BRUTE])
    s.add_argument("--timeout", type=float)
    s = qsub.add_parser("reduce")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    q.set_defaults(handler=cmd_qbf)

    s = sub.add_parser("gen", help="write a family or random arena")
    s.add_argument("family", choices=[*(f.value for f in bench_controller.Family), "random"])
    s.add_argument("-n", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(handler=cmd_gen)

    s = sub.add_parser("bench", help="run solvers on generated instances")
    s.add_argument("--families", nargs="*", default=[f.value for f in bench_controller.Family],
                   choices=[f.value for f in bench_controller.Family])
    s.add_argument("--n", type=_parse_range, default=[2, 3, 4])
    s.add_argument("--algos", type=_parse_algos, default=list(Algorithm))
    s.add_argument("--timeout", type=float)
    s.add_argument("--workers", type=int)
    s.add_argument("--csv", help="wide comparison CSV (stdout when omitted)")
    s.add_argument("--records-csv", help="one row per instance and algorithm")
    s.add_argument("--qbf-vars", type=_parse_range)
    s.add_argument("--qbf-clauses", type=int, default=4)
    s.add_argument("--random", type=int, default=0, help="number of random arenas")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(handler=cmd_bench)
    return p


def _config(args: argparse.Namespace) -> CliConfig:
    algo = getattr(args, "algo", None)
    return CliConfig(
        command=args.command,
        subcommand=getattr(args, "subcommand", None),
        input=getattr(args, "input", None),
        algorithm=algo if algo in ALGORITHMS else None,
        start=getattr(args, "start", None),
        output=getattr(args, "output", None),
        csv=getattr(args, "csv", None),
        timeout=getattr(args, "timeout", None),
        seed=getattr(args, "seed", 0),
        verbosity=args.verbose,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        cfg = _config(args)
        return args.handler(cfg, args)
    except ParaGameError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return InputError.exit_code
    except Exception:
        logger.exception("unexpected failure command=%s", args.command)
        return 1


if __name__ == "__main__":
    sys.exit(run())
