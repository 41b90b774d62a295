import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Sequence

from pydantic import ValidationError

from lllocal.commands import check, gen, reduce, schreier, section, simulate, solve  # noqa: F401
from lllocal.commands.common import render_report
from lllocal.commands.models import CommandOutcome, RunConfig
from lllocal.commands.registry import CommandRegistry
from lllocal.config import app_cfg
from lllocal.constants import (
    AlgorithmName,
    CommandName,
    CSPBuilder,
    ExitCode,
    GraphFamily,
    LCLName,
    SolverKind,
    WitnessKind,
)
from lllocal.exception_handlers import error_report, handle_command_error
from lllocal.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def _choices(enum) -> list[str]:
    return [member.value for member in enum]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=app_cfg.APP_NAME,
        description="Finite LLL solvers, LOCAL simulation and the LCL-to-CSP bridge.",
    )
    parser.add_argument("command", choices=_choices(CommandName))

    files = parser.add_argument_group("inputs")
    files.add_argument("--input", dest="inputs", nargs="+", action="extend", help="primary input file(s)")
    files.add_argument("--graph", help="graph or structured graph file")
    files.add_argument("--partition", help="finite partition file")
    files.add_argument("--witness", help="separation witness file")

    csp = parser.add_argument_group("constraints")
    csp.add_argument("--q", type=int, help="color count")
    csp.add_argument("--s", type=int, help="shattering number / separation index")
    csp.add_argument("--budget", "--L", dest="locality", type=int, help="locality budget L (class size cap)")
    csp.add_argument("--brute-budget", dest="budget", type=int, help="brute-force budget in variables")
    csp.add_argument("--solver", choices=_choices(SolverKind))
    csp.add_argument("--builder", choices=_choices(CSPBuilder), help="build the CSP from --graph")

    local = parser.add_argument_group("LOCAL runs")
    local.add_argument("--problem", choices=_choices(LCLName))
    local.add_argument("--algorithm", choices=_choices(AlgorithmName))
    local.add_argument("--rounds", type=int, help="round count T")
    local.add_argument("--labels", type=int, help="label range")

    generation = parser.add_argument_group("generation")
    generation.add_argument("--family", choices=_choices(GraphFamily))
    generation.add_argument("--size", nargs="+", type=int)
    generation.add_argument("--degree", type=int)
    generation.add_argument("--witness-kind", choices=_choices(WitnessKind))
    generation.add_argument("--moduli", nargs="+", type=int)
    generation.add_argument("--steps", nargs="+", help="generator steps, e.g. 1 6 or 1,0 0,1")
    generation.add_argument("--via-sections", action="store_true", default=None)
    generation.add_argument("--k", type=int)
    generation.add_argument("--delta", type=int)

    run = parser.add_argument_group("run")
    run.add_argument("--seed", type=int)
    run.add_argument("--precision-cap", type=int, help="interval precision cap in bits")
    run.add_argument("--trials", type=int)
    run.add_argument("--threads", type=int, help="worker thread cap")
    run.add_argument("--out", help="report path; side files are written next to it")
    run.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    run.add_argument("--dot", action="store_true", default=None, help="also write DOT output")
    run.add_argument("--timings", action="store_true", default=None, help="include wall-clock timings")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    given = {key: value for key, value in vars(args).items() if value is not None}
    try:
        return RunConfig(**given)
    except ValidationError as e:
        raise InvalidInputError(f"Invalid arguments: {e}") from e


@contextmanager
def runtime_overrides(config: RunConfig):
    """Apply --precision-cap and --threads to app_cfg for the duration of one run."""
    saved = app_cfg.PRECISION_CAP, app_cfg.MAX_WORKERS
    app_cfg.PRECISION_CAP, app_cfg.MAX_WORKERS = config.precision_cap, config.threads
    try:
        yield
    finally:
        app_cfg.PRECISION_CAP, app_cfg.MAX_WORKERS = saved


def run(config: RunConfig) -> tuple[CommandOutcome, str]:
    with runtime_overrides(config):
        try:
            outcome = CommandRegistry.run(config)
        except Exception as exc:
            code = handle_command_error(config.command, exc)
            outcome = CommandOutcome(code, error_report(exc), f"{config.command.value}: {exc}")
    return outcome, render_report(config, outcome)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except InvalidInputError as e:
        print(e, file=sys.stderr)
        return int(ExitCode.INPUT_ERROR)

    logging.basicConfig(
        level=config.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    outcome, text = run(config)
    if config.out is None:
        sys.stdout.write(text + "\n")
    else:
        config.out.write_text(text + "\n")
    logger.info(outcome.summary)
    return int(outcome.exit_code)


if __name__ == '__main__':
    sys.exit(main())
