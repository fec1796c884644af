"""Command line interface: analyze, verify and example."""

import argparse
import asyncio
import logging
import sys
from logging import getLogger
from typing import Sequence

from . import __version__
from .const import (
    DEFAULT_VERIFY_SEED,
    NAME,
    ExitCode,
    OutputFormat,
    VerifyScope,
)
from .error import KsLimitError, ProblemFileError, ValidationFailed
from .forge import example, parse_example_name
from .hodgekit.error import ClosedFormMismatch, FiltrationError, InvalidStructure
from .problem import ProblemFile, dumps_problem, load_problem
from .report import Analysis, render, render_failure
from .verify import run_suite

_LOGGER = getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=NAME, description="Exact Kuga–Satake analysis of K3 type degenerations."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="log progress")
    verbosity.add_argument("--debug", action="store_true", help="log computed details")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="analyze problem files or built-in examples")
    analyze.add_argument("files", nargs="*", metavar="FILE", help="problem files")
    analyze.add_argument(
        "--example", action="append", default=[], metavar="NAME", help="built-in example"
    )
    analyze.add_argument("--zeta-terms", type=int, metavar="K", help="zeta coefficients")
    analyze.add_argument(
        "--neron-components", type=int, metavar="N", help="number of Néron components"
    )
    analyze.add_argument("--out", metavar="FILE", help="report file, single input only")
    analyze.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TOML.value,
        help="report format",
    )

    verify = commands.add_parser("verify", help="run the invariant suite")
    verify.add_argument("--seed", type=int, default=DEFAULT_VERIFY_SEED, help="random seed")
    verify.add_argument(
        "--scope",
        choices=[s.value for s in VerifyScope],
        default=VerifyScope.ALL.value,
        help="which checks to run",
    )
    verify.add_argument(
        "--naive-monodromy",
        action="store_true",
        help="also check that the naive Clifford operator is not the monodromy",
    )

    example_command = commands.add_parser("example", help="write a built-in example")
    example_command.add_argument("name", metavar="NAME")
    example_command.add_argument("--out", metavar="FILE", help="output file")

    return parser


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.WARNING
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    _LOGGER.info("Wrote %s", path)


def _load_inputs(args: argparse.Namespace) -> list[ProblemFile]:
    problems = [load_problem(path) for path in args.files]
    for name in args.example:
        spec = parse_example_name(name)
        problems.append(ProblemFile.from_structure(example(spec.name), spec.name))
    return [
        p.with_options(neron_components=args.neron_components, zeta_terms=args.zeta_terms)
        for p in problems
    ]


def _analyze_one(problem: ProblemFile, output_format: OutputFormat) -> tuple[ExitCode, str]:
    try:
        analysis = Analysis(problem)
    except ValidationFailed as e:
        _LOGGER.error("%s", e)
        return ExitCode.FAILED, render_failure(e.report, e.source)
    except InvalidStructure as e:
        _LOGGER.error("%s", e)
        return ExitCode.FAILED, render_failure(e.report, problem.name)
    except (ClosedFormMismatch, FiltrationError) as e:
        _LOGGER.exception("Inconsistent invariants for %s", problem)
        return ExitCode.FAILED, f"# {e}\n"
    return ExitCode.OK, render(analysis, output_format)


async def _analyze_all(
    problems: Sequence[ProblemFile], output_format: OutputFormat
) -> list[tuple[ExitCode, str]]:
    return await asyncio.gather(
        *(asyncio.to_thread(_analyze_one, p, output_format) for p in problems)
    )


def cmd_analyze(args: argparse.Namespace) -> ExitCode:
    if args.zeta_terms is not None and args.zeta_terms < 1:
        raise ProblemFileError("--zeta-terms must be at least 1")
    if args.neron_components is not None and args.neron_components < 1:
        raise ProblemFileError("--neron-components must be at least 1")
    problems = _load_inputs(args)
    if not problems:
        raise ProblemFileError("Nothing to analyze: give a file or --example")
    if args.out and len(problems) > 1:
        raise ProblemFileError("--out needs exactly one input")

    outcomes = asyncio.run(_analyze_all(problems, OutputFormat(args.format)))
    for _, text in outcomes:
        _write(text, args.out)
    return max((code for code, _ in outcomes), default=ExitCode.OK)


def cmd_verify(args: argparse.Namespace) -> ExitCode:
    result = asyncio.run(run_suite(VerifyScope(args.scope), args.seed, args.naive_monodromy))
    sys.stdout.write(result.summary())
    return ExitCode.OK if result.passed else ExitCode.FAILED


def cmd_example(args: argparse.Namespace) -> ExitCode:
    spec = parse_example_name(args.name)
    problem = ProblemFile.from_structure(example(spec.name), spec.name)
    _write(dumps_problem(problem), args.out)
    return ExitCode.OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "example": cmd_example}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)
    try:
        return int(COMMANDS[args.command](args))
    except KsLimitError as e:
        sys.stderr.write(f"{e}\n")
        return int(ExitCode.ERROR)
    except Exception:
        _LOGGER.exception("Unexpected error running %s", args.command)
        return int(ExitCode.ERROR)
