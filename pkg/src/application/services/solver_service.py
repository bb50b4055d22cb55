"""
Solver Service - coordinates preprocess, reduce, tree building, validation and the oracle
"""
import time
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from src.application.services.hasse_service import build_diagram, maximal_reducible_graph
from src.application.services.matrix_service import preprocess
from src.application.services.oracle_service import OracleResult, solve_bruteforce, witness_tree
from src.application.services.reduction_service import ReductionService
from src.application.services.tree_service import TreeValidation, build_tree, lift_tree, validate_tree
from src.config.constants import Verdict
from src.config.settings import Settings, get_settings
from src.domain.entities.binary_matrix import BinaryMatrix, PreprocessReport
from src.domain.entities.hasse_diagram import HasseDiagram
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.reduction_trace import Abort, ReductionTrace
from src.error_trace.exceptions import ConfigurationError, TreeBuildError
from src.utilities.logger import get_logger

logger = get_logger(__name__)


@dataclass
class SolveOutcome:
    """Everything one solve run produced"""

    matrix: BinaryMatrix
    reduced: BinaryMatrix
    report: PreprocessReport
    graph: RBGraph
    result: Union[ReductionTrace, Abort]
    tree: Optional[PersistentTree] = None
    lifted: Optional[PersistentTree] = None
    validation: Optional[TreeValidation] = None
    oracle: Optional[OracleResult] = None
    elapsed: float = 0.0
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def is_success(self) -> bool:
        return self.result.is_success

    @property
    def verdict(self) -> Verdict:
        return Verdict.SOLVABLE if self.is_success else Verdict.UNSOLVABLE

    @property
    def cross_check_mismatch(self) -> bool:
        """True when the oracle ran within budget and disagrees"""
        if self.oracle is None or self.oracle.verdict is Verdict.OVER_BUDGET:
            return False
        return self.oracle.is_solvable != self.is_success


class SolverService:
    """Service running the full pipeline on a parsed matrix"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.reduction = ReductionService(self.settings)

    def solve(
        self,
        matrix: BinaryMatrix,
        cross_check: bool = False,
        oracle_budget: Optional[int] = None,
    ) -> SolveOutcome:
        """
        Decide (M, A) and build its persistent phylogeny

        A tree that fails validation turns the outcome into an Abort.

        Args:
            matrix: Parsed matrix with its active set
            cross_check: Also run the oracle on the preprocessed matrix
            oracle_budget: Unknown-count limit for the oracle

        Returns:
            SolveOutcome
        """
        started = time.perf_counter()
        logger.info(f"Solving {matrix.n_species}x{matrix.n_characters} matrix, {len(matrix.active)} active")

        reduced, report = preprocess(matrix)
        graph = RBGraph.from_matrix(reduced)
        result = self.reduction.reduce(graph)
        outcome = SolveOutcome(matrix, reduced, report, graph, result)
        outcome.timings["reduce"] = time.perf_counter() - started

        if isinstance(result, ReductionTrace):
            try:
                outcome.tree = build_tree(reduced, result, validate=self.settings.validate_trees)
                outcome.lifted = lift_tree(outcome.tree, matrix, report)
                outcome.validation = validate_tree(outcome.lifted, matrix)
                if not outcome.validation:
                    raise TreeBuildError(
                        f"lifted tree violates condition {outcome.validation.condition}: "
                        f"{outcome.validation.message}",
                        error_code="INVALID_TREE",
                        details=outcome.validation.to_dict(),
                    )
            except TreeBuildError as e:
                logger.warning(f"Tree construction failed, reporting no phylogeny: {e.message}")
                outcome.result = Abort(f"tree construction failed: {e.message}", choices=result.choices)
                outcome.tree = outcome.lifted = None

        if cross_check:
            tick = time.perf_counter()
            outcome.oracle = solve_bruteforce(reduced, oracle_budget)
            outcome.timings["oracle"] = time.perf_counter() - tick
            if outcome.cross_check_mismatch:
                logger.warning(
                    f"Cross-check mismatch: reduce={outcome.verdict.value}, oracle={outcome.oracle.verdict.value}"
                )

        outcome.elapsed = time.perf_counter() - started
        logger.info(f"Solve finished: {outcome.verdict.value} in {outcome.elapsed:.3f}s")
        return outcome

    def oracle(self, matrix: BinaryMatrix, budget: Optional[int] = None) -> OracleResult:
        """Oracle verdict on the preprocessed matrix"""
        reduced, _ = preprocess(matrix)
        return solve_bruteforce(reduced, budget)

    def oracle_tree(self, matrix: BinaryMatrix, budget: Optional[int] = None) -> Optional[PersistentTree]:
        """Witness tree of the oracle, lifted to the original matrix; None unless solvable"""
        reduced, report = preprocess(matrix)
        result = solve_bruteforce(reduced, budget)
        if result.completion is None:
            return None
        return lift_tree(witness_tree(reduced, result.completion), matrix, report)

    def graph(self, matrix: BinaryMatrix) -> RBGraph:
        reduced, _ = preprocess(matrix)
        return RBGraph.from_matrix(reduced)

    def hasse_at_level(self, matrix: BinaryMatrix, level: int = 0) -> HasseDiagram:
        """
        Hasse diagram built at the given safe-source level of the reduction

        Falls back to the diagram of the whole graph at level 0 when the
        reduction never reaches a safe-source level.

        Raises:
            ConfigurationError: the reduction has fewer levels
        """
        graph = self.graph(matrix)
        result = self.reduction.reduce(graph)
        diagrams: Dict[int, HasseDiagram] = {}
        for choice in result.choices:
            diagrams.setdefault(choice.level, choice.diagram)
        if isinstance(result, Abort) and result.diagram is not None and result.path:
            last = result.path[-1]
            if last.startswith("level "):
                diagrams.setdefault(int(last.split()[1]), result.diagram)
        if level in diagrams:
            return diagrams[level]
        if level == 0 and not diagrams:
            return build_diagram(maximal_reducible_graph(graph)[1])
        raise ConfigurationError(
            f"the reduction has {len(diagrams)} safe-source levels; level {level} does not exist",
            error_code="NO_SUCH_LEVEL",
        )
