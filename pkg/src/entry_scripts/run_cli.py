"""
Entry point for the persistent phylogeny command line
"""
import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.adapters.cli import RunConfig, run
from src.config.constants import Command, ExitCode, OutputFormat
from src.utilities.logger import get_logger, setup_logging

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pphylo",
        description="Decide whether a binary matrix admits a persistent phylogeny and build the tree",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        sub = commands.add_parser(command.value)
        sub.add_argument("input", nargs="?", default="-", help="Matrix file, '-' for stdin")
        sub.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
        sub.add_argument("--active", help="Comma-separated active characters, overriding the file directive")
        sub.add_argument("--oracle-budget", type=int, help="Largest unknown count the oracle searches")
        sub.add_argument("--strict-names", action="store_true", default=None, help="Reject auto-named rows and columns")
        sub.add_argument("--seed", type=int, help="Accepted for harness compatibility; unused")
        sub.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
        if command is Command.SOLVE:
            sub.add_argument("--cross-check", action="store_true", help="Also run the oracle and compare")
            sub.add_argument("--contract", action="store_true", help="Merge unlabelled single-child paths")
        if command is Command.INSPECT_HASSE:
            sub.add_argument("--level", type=int, default=0, help="Safe-source level of the reduction")
        if command is Command.VERIFY:
            sub.add_argument("--tree", dest="tree_path", required=True, help="Newick tree to validate")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=args.input,
        output_format=args.output_format,
        active=[name.strip() for name in args.active.split(",") if name.strip()] if args.active is not None else None,
        oracle_budget=args.oracle_budget,
        cross_check=getattr(args, "cross_check", False),
        strict_names=args.strict_names,
        seed=args.seed,
        contract=getattr(args, "contract", False),
        level=getattr(args, "level", 0),
        tree_path=getattr(args, "tree_path", None),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code"""
    args = build_parser().parse_args(argv)
    setup_logging({0: None, 1: "INFO"}.get(args.verbose, "DEBUG"))

    try:
        config = config_from_args(args)
    except ValidationError as e:
        for error in e.errors():
            sys.stderr.write(f"error: {error['msg']}\n")
        return int(ExitCode.INPUT_ERROR)

    return run(config, sys.stdin, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
