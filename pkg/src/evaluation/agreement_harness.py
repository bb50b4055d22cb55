"""
Agreement harness - reduce against the exhaustive oracle
=========================================================

Every instance is solved with the cross-check enabled. Besides the verdict
pair, each record carries the structural checks of a successful reduction:
no intermediate graph holds a red sigma, the tree validates, and a connected
instance gives a root with a single child.
"""
import time
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from src.application.services.realization_service import RealizationStep, replay
from src.application.services.solver_service import SolveOutcome, SolverService
from src.config.constants import Verdict
from src.config.settings import Settings, get_settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.value_objects.reduction_trace import ReductionTrace
from src.utilities.logger import get_logger

logger = get_logger(__name__)


@dataclass
class AgreementRecord:
    """Outcome of one instance"""

    family: str
    instance: str
    active: str
    species: int
    characters: int
    reduce_verdict: str
    oracle_verdict: str
    agree: Optional[bool]
    negatives: int
    tree_valid: Optional[bool]
    sigma_violations: int
    connected: bool
    root_children: Optional[int]
    abort_reason: str
    elapsed: float

    @property
    def root_check(self) -> bool:
        return not (self.connected and self.root_children is not None and self.root_children != 1)

    def to_dict(self) -> Dict[str, Any]:
        return {**asdict(self), "root_check": self.root_check}


def describe(matrix: BinaryMatrix) -> str:
    """Rows joined by '/', e.g. 1100/0110"""
    return "/".join("".join(str(int(v)) for v in matrix.row(s)) for s in range(matrix.n_species))


def sigma_violations(outcome: SolveOutcome) -> int:
    """Graphs along a successful reduction that hold a red sigma, the start graph included"""
    if not isinstance(outcome.result, ReductionTrace):
        return 0
    count = int(outcome.graph.has_red_sigma())

    def observe(step: RealizationStep) -> None:
        nonlocal count
        count += int(step.graph.has_red_sigma())

    replay(outcome.graph, outcome.result.sequence, observe)
    return count


class AgreementHarness:
    """Runs instance families and collects one record per instance"""

    def __init__(self, settings: Optional[Settings] = None, oracle_budget: Optional[int] = None):
        self.settings = settings or get_settings()
        self.solver = SolverService(self.settings)
        self.oracle_budget = oracle_budget if oracle_budget is not None else self.settings.oracle_budget

    def check(self, matrix: BinaryMatrix, family: str = "") -> AgreementRecord:
        started = time.perf_counter()
        outcome = self.solver.solve(matrix, cross_check=True, oracle_budget=self.oracle_budget)
        oracle = outcome.oracle.verdict
        agree = None if oracle is Verdict.OVER_BUDGET else not outcome.cross_check_mismatch

        success = isinstance(outcome.result, ReductionTrace)
        root_children = None
        if success and outcome.tree is not None:
            root_children = len(outcome.tree.children(outcome.tree.root))

        return AgreementRecord(
            family=family,
            instance=describe(matrix),
            active=",".join(matrix.character_names[c] for c in sorted(matrix.active)),
            species=matrix.n_species,
            characters=matrix.n_characters,
            reduce_verdict=outcome.verdict.value,
            oracle_verdict=oracle.value,
            agree=agree,
            negatives=outcome.result.negative_count if success else 0,
            tree_valid=bool(outcome.validation) if outcome.validation is not None else None,
            sigma_violations=sigma_violations(outcome),
            connected=outcome.graph.is_connected(),
            root_children=root_children,
            abort_reason="" if success else outcome.result.reason,
            elapsed=time.perf_counter() - started,
        )

    def run(self, instances: Iterable[BinaryMatrix], family: str = "") -> pd.DataFrame:
        """
        Check every instance of a family

        Returns:
            DataFrame with one row per instance
        """
        records: List[Dict[str, Any]] = []
        for i, matrix in enumerate(instances, 1):
            record = self.check(matrix, family)
            if record.agree is False:
                logger.warning(
                    f"{family} #{i} {record.instance}: reduce={record.reduce_verdict} "
                    f"oracle={record.oracle_verdict}"
                )
            records.append(record.to_dict())
        logger.info(f"Checked {len(records)} instances of {family or 'family'}")
        return pd.DataFrame(records, columns=list(_COLUMNS))


_COLUMNS = tuple(AgreementRecord.__dataclass_fields__) + ("root_check",)


def disagreements(df: pd.DataFrame) -> pd.DataFrame:
    """Rows where both verdicts exist and differ"""
    return df[df["agree"] == False]  # noqa: E712


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    """Per-family counts of verdicts and check failures"""
    if df.empty:
        return pd.DataFrame()
    grouped = df.groupby("family", sort=False)
    return pd.DataFrame(
        {
            "instances": grouped.size(),
            "solvable": grouped["reduce_verdict"].apply(lambda v: int((v == Verdict.SOLVABLE.value).sum())),
            "over_budget": grouped["oracle_verdict"].apply(lambda v: int((v == Verdict.OVER_BUDGET.value).sum())),
            "disagreements": grouped["agree"].apply(lambda v: int((v == False).sum())),  # noqa: E712
            "invalid_trees": grouped["tree_valid"].apply(lambda v: int((v == False).sum())),  # noqa: E712
            "sigma_violations": grouped["sigma_violations"].sum(),
            "root_violations": grouped["root_check"].apply(lambda v: int((~v.astype(bool)).sum())),
            "seconds": grouped["elapsed"].sum().round(3),
        }
    )
