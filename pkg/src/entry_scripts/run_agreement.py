"""
Entry point for the reduce/oracle agreement harness
"""
import argparse
import sys
from typing import Dict, Iterable, List, Optional

import pandas as pd

from src.config.settings import get_settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.evaluation import (
    AgreementHarness,
    disagreements,
    exhaustive_matrices,
    random_laminar_matrices,
    random_matrices,
    summarize,
    unique_matrices,
)
from src.utilities.logger import get_logger, setup_logging

logger = get_logger(__name__)


def families(seed: int, quick: bool) -> Dict[str, Iterable[BinaryMatrix]]:
    """Instance families by name; quick shrinks every family"""
    shape = 3 if quick else 4
    count, laminar = (50, 20) if quick else (500, 200)
    return {
        f"exhaustive-{shape}x{shape}": unique_matrices(exhaustive_matrices(shape, shape)),
        "random-5x6": random_matrices(count, 5, 6, seed=seed, active_sizes=(0, 1)),
        "laminar-8x8": random_laminar_matrices(laminar, 8, 8, seed=seed),
    }


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="pphylo-agreement", description="Compare reduce with the oracle")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--quick", action="store_true", help="Smaller families")
    parser.add_argument("--family", action="append", help="Run only the named families")
    parser.add_argument("--oracle-budget", type=int, default=30, help="Largest unknown count the oracle searches")
    parser.add_argument("--output", help="CSV file for the per-instance records")
    args = parser.parse_args(argv)

    settings = get_settings()
    setup_logging(settings.log_level, settings.log_file)
    harness = AgreementHarness(settings, oracle_budget=args.oracle_budget)

    frames = []
    for name, instances in families(args.seed, args.quick).items():
        if args.family and name not in args.family:
            continue
        logger.info(f"Running {name}")
        frames.append(harness.run(instances, name))
    report = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()

    if args.output and not report.empty:
        report.to_csv(args.output, index=False)
        logger.info(f"Records saved to {args.output}")

    summary = summarize(report)
    sys.stdout.write(summary.to_string() + "\n" if not summary.empty else "no instances\n")

    failed = not report.empty and (
        len(disagreements(report)) > 0
        or int(summary["invalid_trees"].sum()) > 0
        or int(summary["sigma_violations"].sum()) > 0
        or int(summary["root_violations"].sum()) > 0
    )
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
