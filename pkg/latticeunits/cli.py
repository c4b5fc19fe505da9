"""
Command-line front end for latticeunits.

Exit codes:

* 0: success, or SAT for ``decide``
* 1: other errors, or a failed check for ``reproduce``
* 2: malformed document or partition
* 10: UNSAT
* 11: the candidate fails HeLP
* 12: the block is not a skewfield-free block of defect 1
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from latticeunits.decider import decide_blocks
from latticeunits.errors import (
    DocumentValidationError,
    HeLPInfeasibleError,
    LatticeUnitsError,
    UnsupportedBlockError,
)
from latticeunits.grouprep import help_feasible, help_report, multiplicity_frame
from latticeunits.models import RunConfig
from latticeunits.psl2 import brauer_trees, character_table
from latticeunits.reports import format_frame, format_verdicts, save_frame
from latticeunits.reproduce import TARGETS, run_reproduction
from latticeunits.tableaux import (
    SkewShape,
    enumerate_fillings,
    filtration_exists,
    lr_exists,
    parse_partition,
)
from latticeunits.validate import (
    build_run_config,
    load_character_table,
    load_instance_bundle,
    load_run_config,
    load_unit_candidate,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DOCUMENT = 2
EXIT_UNSAT = 10
EXIT_HELP_INFEASIBLE = 11
EXIT_UNSUPPORTED = 12

# Options which a configuration file may set and a flag may override
OVERRIDABLE = ["p", "prune", "threads", "emit_witness", "output_format", "output"]


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser

    :return: parser
    """
    parser = argparse.ArgumentParser(
        prog="latticeunits",
        description="Decide the local existence of torsion units in blocks of "
        "defect 1",
    )
    parser.add_argument("--config", default=None, help="Run configuration file")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "structured"],
        default=None,
    )
    parser.add_argument("--output", default=None, help="Optional CSV report path")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument(
        "--no-prune", dest="prune", action="store_false", default=None
    )
    parser.add_argument(
        "--no-witness", dest="emit_witness", action="store_false", default=None
    )

    commands = parser.add_subparsers(dest="command", required=True)

    lr = commands.add_parser("lr", help="Littlewood-Richardson existence")
    lr.add_argument("--outer", required=True)
    lr.add_argument("--inner", default="")
    lr.add_argument("--content", required=True)
    lr.add_argument("--fillings", action="store_true", help="List all fillings")

    filtration = commands.add_parser("filtration", help="Filtration existence")
    filtration.add_argument("--total", required=True)
    filtration.add_argument("--factors", nargs="+", required=True)

    mult = commands.add_parser("mult", help="Eigenvalue multiplicities")
    mult.add_argument("--table", required=True)
    mult.add_argument("--candidate", required=True)
    mult.add_argument("--character", default=None)

    help_check = commands.add_parser("help-check", help="HeLP constraints")
    help_check.add_argument("--table", required=True)
    help_check.add_argument("--candidate", required=True)

    decide = commands.add_parser("decide", help="Decide an instance bundle")
    decide.add_argument("bundle")

    psl2 = commands.add_parser("psl2", help="Generated data for PSL(2, q)")
    psl2.add_argument("kind", choices=["table", "tree"])
    psl2.add_argument("--q", type=int, required=True)
    psl2.add_argument("--t", type=int, default=None)

    reproduce = commands.add_parser("reproduce", help="Run a worked example")
    reproduce.add_argument("target", choices=TARGETS)
    reproduce.add_argument("--q", type=int, default=None)
    reproduce.add_argument("--t", "--p", dest="t", type=int, default=None)

    return parser


def _inputs(args: argparse.Namespace) -> list[str]:
    if args.command == "decide":
        return [args.bundle]
    if args.command in ["mult", "help-check"]:
        return [args.table] + (
            [] if args.candidate.startswith("{") else [args.candidate]
        )
    return []


def merge_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge the configuration file with the command-line flags, flags winning

    :param args: parsed arguments
    :return: RunConfig
    """
    settings = {}
    if args.config is not None:
        settings.update(load_run_config(args.config))
    settings["command"] = args.command
    settings["inputs"] = _inputs(args)
    for key in OVERRIDABLE:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if args.command == "reproduce" and args.t is not None:
        settings["p"] = args.t
    config = build_run_config(settings)
    logger.debug(f"Run configuration: {config.model_dump()}")
    return config


def cmd_lr(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Whether a Littlewood-Richardson filling exists, optionally listing them

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    outer = parse_partition(args.outer)
    inner = parse_partition(args.inner)
    content = parse_partition(args.content)
    print(f"exists: {_bool_text(lr_exists(outer, inner, content))}")
    if args.fillings:
        if len(outer) < len(inner) or any(a < b for a, b in zip(outer, inner)):
            return EXIT_OK
        fillings = enumerate_fillings(SkewShape(outer=outer, inner=inner), content)
        for tableau in fillings:
            rows = [",".join(str(x) for x in row) for row in tableau.rows()]
            print(" | ".join(rows))
    return EXIT_OK


def cmd_filtration(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Whether a module has a filtration with given quotients

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    total = parse_partition(args.total, bound=config.p)
    factors = [parse_partition(x, bound=config.p) for x in args.factors]
    print(f"exists: {_bool_text(filtration_exists(total, factors))}")
    return EXIT_OK


def cmd_mult(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Print the multiplicity grids of a candidate

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    table = load_character_table(args.table)
    unit = _candidate(args.candidate)
    frame = multiplicity_frame(table, unit)
    if args.character is not None:
        if args.character not in table.character_ids():
            err = f"Unknown character {args.character}"
            logger.error(err)
            raise DocumentValidationError(err)
        frame = frame.loc[[args.character]]
    frame = frame.reset_index(names="character")
    print(format_frame(frame, config.output_format))
    save_frame(frame, config.output)
    return EXIT_OK


def cmd_help_check(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Print the HeLP report of a candidate

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    table = load_character_table(args.table)
    unit = _candidate(args.candidate)
    report = help_report(table, unit)
    feasible, violations = help_feasible(table, unit)
    print(format_frame(report, config.output_format))
    for violation in violations:
        print(f"violation: {violation}")
    print(f"feasible: {_bool_text(feasible)}")
    save_frame(report, config.output)
    return EXIT_OK if feasible else EXIT_HELP_INFEASIBLE


def cmd_decide(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Decide every block of an instance bundle

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    loaded = load_instance_bundle(args.bundle)
    verdicts = decide_blocks(
        loaded.table,
        loaded.trees,
        loaded.candidate,
        prune=config.prune,
        threads=config.threads,
        skewfield_free=loaded.bundle.skewfield_free,
    )
    print(format_verdicts(verdicts, config.output_format, config.emit_witness))
    return EXIT_OK if all(v.sat for v in verdicts) else EXIT_UNSAT


def cmd_psl2(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Print a generated character table or the Brauer trees at t

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    if args.kind == "table":
        print(character_table(args.q).model_dump_json(indent=2))
        return EXIT_OK
    t = args.t if args.t is not None else config.p
    if t is None:
        err = "psl2 tree needs --t"
        logger.error(err)
        raise DocumentValidationError(err)
    for tree in brauer_trees(args.q, t):
        print(tree.model_dump_json(indent=2, exclude_none=True))
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Run a reproduction suite and print one line per check

    :param args: parsed arguments
    :param config: run configuration
    :return: exit code
    """
    frame = run_reproduction(
        args.target,
        q=args.q,
        t=config.p,
        prune=config.prune,
        threads=config.threads,
        output=config.output,
    )
    print(format_frame(frame, config.output_format))
    if not frame["passed"].all():
        for row in frame[~frame["passed"]].itertuples():
            print(f"FAILED {row.check}: expected {row.expected}, got {row.observed}")
        return EXIT_ERROR
    return EXIT_OK


def _candidate(reference: str):
    if reference.startswith("{"):
        return load_unit_candidate(_json_text(reference))
    return load_unit_candidate(Path(reference))


def _json_text(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        err = f"Inline candidate is not valid JSON: {exc}"
        logger.error(err)
        raise DocumentValidationError(err) from exc


COMMANDS = {
    "lr": cmd_lr,
    "filtration": cmd_filtration,
    "mult": cmd_mult,
    "help-check": cmd_help_check,
    "decide": cmd_decide,
    "psl2": cmd_psl2,
    "reproduce": cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point

    :param argv: arguments, defaults to sys.argv
    :return: exit code
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = merge_config(args)
        return COMMANDS[args.command](args, config)
    except DocumentValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOCUMENT
    except HeLPInfeasibleError as exc:
        print(f"HeLP infeasible: {exc}", file=sys.stderr)
        return EXIT_HELP_INFEASIBLE
    except UnsupportedBlockError as exc:
        print(f"unsupported block: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except LatticeUnitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
