import argparse
import logging
import sys
import time
from enum import IntEnum
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence

import numpy as np
from pydantic import ValidationError

from ..__version__ import __version__
from ..exceptions import (
    ConfigError,
    GuaranteeViolation,
    InstanceTooLargeError,
    LatticeStreamException,
    StreamFormatError
)
from ..oracles import GENERATORS, GeneratorConfig, ProblemInstance, generate
from ..sieve import AlgoConfig, run, run_fixed
from ..util import json_dump_content, json_load_content
from ..verify import (
    BRUTE_FORCE_LIMIT,
    SuiteConfig,
    brute_force_opt,
    raise_for_violation,
    run_suite,
    validate_run
)
from .reports import RunReport, write_report
from .streamio import read_stream, write_stream


logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    INPUT_ERROR = 2
    TOO_LARGE = 3


def report_error(err: BaseException) -> ExitCode:
    """Write one JSON line describing `err` to stderr and pick the exit code"""
    if isinstance(err, GuaranteeViolation):
        code = ExitCode.VIOLATION
    elif isinstance(err, InstanceTooLargeError):
        code = ExitCode.TOO_LARGE
    else:
        code = ExitCode.INPUT_ERROR
    record: Dict[str, Any] = {
        "error": err.__class__.__name__,
        "message": " ".join(str(err).split()),
        "exit": int(code),
    }
    if isinstance(err, StreamFormatError) and err.line is not None:
        record["line"] = err.line
    sys.stderr.write(json_dump_content(record) + "\n")
    sys.stderr.flush()
    return code


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are reported as a JSON line like every other failure"""

    def error(self, message: str) -> NoReturn:
        report_error(ConfigError(f"{self.prog}: {message}"))
        sys.exit(ExitCode.INPUT_ERROR)


def _add_algo_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", default=None, help="submodular (default) or alpha")
    parser.add_argument("--t", default=None, help="submodular mode scale, 'auto' or a real >= 1")
    parser.add_argument("--alpha", type=float, default=None, help="alpha mode ratio in (0, 1]")
    parser.add_argument("--epsilon", type=float, default=None, help="grid ratio 1 + epsilon")
    parser.add_argument("--level-search", default=None, help="binary or linear")
    parser.add_argument("--workers", type=int, default=None, help="threads per element")

def _add_instance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="stream file (JSON lines)")
    parser.add_argument("--oracle", default=None, help="oracle file, overrides the header")
    parser.add_argument("--seed", type=int, default=None, help="shuffle the arrival order with this seed")

def _add_gen_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", default="coverage", help=f"one of {', '.join(GENERATORS)}")
    parser.add_argument("--n", type=int, default=5, help="ground set size")
    parser.add_argument("--bmax", type=int, default=3, help="largest box entry")
    parser.add_argument("--k", type=int, default=6, help="cardinality budget")
    parser.add_argument("--cost-max", type=float, default=0.5, help="unit costs drawn from [0, cost-max]")

def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="latticestream",
        description="One pass streaming maximization of g(x) - c(x) on the integer lattice"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING", help="logging level, default WARNING")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="run the streaming algorithm on a stream file")
    _add_instance_flags(run_parser)
    _add_algo_flags(run_parser)
    run_parser.add_argument("--tau", type=float, default=None, help="single fixed threshold, no guessing")
    run_parser.add_argument("--verify", action="store_true", help="brute force and validate the run")
    run_parser.add_argument("--out", default=None, help="report path, stdout when omitted")
    run_parser.set_defaults(handler=cmd_run)

    gen_parser = commands.add_parser("gen", help="generate a seeded instance")
    _add_gen_flags(gen_parser)
    gen_parser.add_argument("--seed", type=int, default=0)
    gen_parser.add_argument("--out", required=True, help="stream file path, oracle goes next to it")
    gen_parser.set_defaults(handler=cmd_gen)

    verify_parser = commands.add_parser("verify", help="check a run against the brute force optimum")
    _add_instance_flags(verify_parser)
    _add_algo_flags(verify_parser)
    verify_parser.add_argument("--report", default=None, help="validate this run report instead of running")
    verify_parser.add_argument("--limit", type=int, default=BRUTE_FORCE_LIMIT, help="brute force point limit")
    verify_parser.add_argument("--out", default=None, help="report path, stdout when omitted")
    verify_parser.set_defaults(handler=cmd_verify)

    suite_parser = commands.add_parser("suite", help="run the seeded acceptance corpus")
    _add_gen_flags(suite_parser)
    _add_algo_flags(suite_parser)
    suite_parser.add_argument("--count", type=int, default=200)
    suite_parser.add_argument("--seed", type=int, default=0)
    suite_parser.add_argument("--out", default=None, help="report path, stdout when omitted")
    suite_parser.set_defaults(handler=cmd_suite)
    return parser


def _given(args: argparse.Namespace, *names: str) -> Dict[str, Any]:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}

def _config(args: argparse.Namespace) -> AlgoConfig:
    """
    Raises:
        - ConfigError: flags outside their ranges
    """
    try:
        return AlgoConfig(**_given(args, "mode", "t", "alpha", "epsilon", "level_search", "workers"))
    except ValidationError as err:
        raise ConfigError(f"Invalid configuration: {err}") from err

def _load_instance(args: argparse.Namespace) -> ProblemInstance:
    inst = read_stream(args.input, args.oracle)
    if args.seed is not None:
        rng = np.random.default_rng(args.seed)
        order = [inst.stream_order[int(i)] for i in rng.permutation(len(inst.stream_order))]
        inst = inst.copy(update={"stream_order": order})
    return inst

def _emit(out: Optional[str], content: bytes, started: float) -> None:
    if out is None:
        sys.stdout.buffer.write(content)
        sys.stdout.flush()
        return
    write_report(out, content, {"wall_seconds": time.perf_counter() - started})
    logger.info("report written to %s", out)


def cmd_run(args: argparse.Namespace) -> int:
    """Run the sieve, or one fixed threshold with --tau, and write the report"""
    inst = _load_instance(args)
    cfg = _config(args)
    started = time.perf_counter()
    if args.tau is not None:
        if args.tau < 0:
            raise ConfigError(f"tau must be nonnegative, got {args.tau}")
        solution = run_fixed(inst, cfg, args.tau)
    else:
        solution = run(inst, cfg)
    verification = None
    if args.verify:
        opt = brute_force_opt(inst)
        verification = validate_run(solution, inst, cfg, opt)
        solution = solution.copy(update={"mu": verification.mu, "nu": verification.nu})
    report = RunReport.from_solution(inst, solution, verification)
    _emit(args.out, report.canonical(), started)
    if verification is not None:
        raise_for_violation(verification)
    return ExitCode.OK

def cmd_gen(args: argparse.Namespace) -> int:
    """Write a seeded stream file and its paired oracle file"""
    try:
        config = GeneratorConfig(
            family=args.family,
            n=args.n,
            b_max=args.bmax,
            k=args.k,
            seed=args.seed,
            cost_max=args.cost_max
        )
    except ValidationError as err:
        raise ConfigError(f"Invalid generator flags: {err}") from err
    stream, oracle = write_stream(generate(config), args.out)
    logger.info("generated %s with oracle %s", stream, oracle)
    return ExitCode.OK

def _read_report(path: str) -> RunReport:
    try:
        return RunReport.parse_obj(json_load_content(Path(path).read_bytes()))
    except OSError as err:
        raise ConfigError(f"Cannot read report '{path}': {err}") from err
    except (ValueError, ValidationError) as err:
        raise ConfigError(f"Invalid run report '{path}': {err}") from err

def cmd_verify(args: argparse.Namespace) -> int:
    """
    Brute force the instance, then validate either a fresh run or the
    report given with --report. Exit 1 on any failed check
    """
    inst = _load_instance(args)
    started = time.perf_counter()
    opt = brute_force_opt(inst, limit=args.limit)
    if args.report is not None:
        solution = _read_report(args.report).solution
        try:
            cfg = AlgoConfig.parse_obj(solution.config)
        except ValidationError as err:
            raise ConfigError(f"Invalid configuration in report: {err}") from err
    else:
        cfg = _config(args)
        solution = run(inst, cfg)
    verification = validate_run(solution, inst, cfg, opt)
    solution = solution.copy(update={"mu": verification.mu, "nu": verification.nu})
    report = RunReport.from_solution(inst, solution, verification)
    _emit(args.out, report.canonical(), started)
    raise_for_violation(verification)
    return ExitCode.OK

def cmd_suite(args: argparse.Namespace) -> int:
    """Run the seeded corpus; exit 1 when any case reports a violation"""
    try:
        config = SuiteConfig(
            family=args.family,
            count=args.count,
            n=args.n,
            b_max=args.bmax,
            k=args.k,
            seed=args.seed,
            cost_max=args.cost_max,
            **_given(args, "mode", "t", "epsilon", "level_search", "workers")
        )
    except ValidationError as err:
        raise ConfigError(f"Invalid suite flags: {err}") from err
    started = time.perf_counter()
    report = run_suite(config)
    _emit(args.out, report.canonical(), started)
    if not report.satisfied:
        raise GuaranteeViolation(
            f"{report.violation_count} violation(s) across {len(report.cases)} cases",
            report=report
        )
    return ExitCode.OK


def configure_logging(level: str) -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ConfigError(f"Unknown log level '{level}'")
    logging.basicConfig(
        level=numeric,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

def main(argv: Sequence[str] = None) -> int:
    """Entry point, returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    try:
        configure_logging(args.log_level)
        return int(args.handler(args))
    except (LatticeStreamException, ValidationError) as err:
        return int(report_error(err))
