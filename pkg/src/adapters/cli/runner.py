"""
CLI runner - executes a RunConfig against text streams and returns the exit code
"""
from pathlib import Path
from typing import Callable, Dict, Optional, TextIO

from src.adapters.cli.run_config import RunConfig
from src.adapters.formats.dot_writer import graph_to_dot, hasse_to_dot
from src.adapters.formats.newick import export_newick, parse_newick
from src.adapters.formats.summary import ChoiceSummary, EventSummary, OracleSummary, Summary, ValidationSummary
from src.adapters.formats.trace_codec import serialize_trace
from src.application.services.matrix_service import parse_matrix, serialize_matrix
from src.application.services.solver_service import SolveOutcome, SolverService
from src.application.services.tree_service import contract_tree, export_tree, validate_tree
from src.config.constants import NO_PHYLOGENY_MESSAGE, Command, ExitCode, OutputFormat, Verdict
from src.config.settings import Settings, get_settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.value_objects.reduction_trace import ReductionTrace
from src.error_trace.exceptions import (
    ConfigurationError,
    MatrixValidationError,
    ParseError,
    PersistentPhylogenyError,
    TreeParseError,
    UnknownVertexError,
)
from src.utilities.logger import get_logger

logger = get_logger(__name__)

_INPUT_ERRORS = (ParseError, MatrixValidationError, UnknownVertexError, TreeParseError, ConfigurationError)


class CommandRunner:
    """Dispatches one command; writes the artifact to stdout and diagnostics to stderr"""

    def __init__(self, config: RunConfig, stdin: TextIO, stdout: TextIO, stderr: TextIO,
                 settings: Optional[Settings] = None):
        self.config = config
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr
        self.settings = settings or get_settings()
        self.solver = SolverService(self.settings)
        self.handlers: Dict[Command, Callable[[BinaryMatrix], ExitCode]] = {
            Command.SOLVE: self.solve,
            Command.INSPECT_GRAPH: self.inspect_graph,
            Command.INSPECT_HASSE: self.inspect_hasse,
            Command.ORACLE: self.oracle,
            Command.VERIFY: self.verify,
        }

    @property
    def budget(self) -> int:
        return self.config.oracle_budget if self.config.oracle_budget is not None else self.settings.oracle_budget

    def run(self) -> ExitCode:
        try:
            matrix = self.read_matrix()
            return self.handlers[self.config.command](matrix)
        except _INPUT_ERRORS as e:
            logger.error(f"Input error: {e.message}")
            self.stderr.write(f"error: {e.message}\n")
            return ExitCode.INPUT_ERROR
        except OSError as e:
            logger.error(f"Input error: {e}")
            self.stderr.write(f"error: {e}\n")
            return ExitCode.INPUT_ERROR
        except PersistentPhylogenyError as e:
            logger.error(f"Internal error: {e.to_dict()}")
            self.stderr.write(f"internal error: {e.message}\n")
            return ExitCode.INTERNAL_ERROR

    def read_matrix(self) -> BinaryMatrix:
        strict = self.config.strict_names if self.config.strict_names is not None else self.settings.strict_names
        if self.config.reads_stdin:
            return parse_matrix(self.stdin, strict_names=strict, active=self.config.active)
        with open(self.config.input_path, encoding="utf-8") as handle:
            return parse_matrix(handle, strict_names=strict, active=self.config.active)

    def summary(self, matrix: BinaryMatrix, **fields) -> Summary:
        return Summary(
            command=self.config.command.value,
            species=matrix.n_species,
            characters=matrix.n_characters,
            active=[matrix.character_names[c] for c in sorted(matrix.active)],
            **fields,
        )

    # Commands

    def solve(self, matrix: BinaryMatrix) -> ExitCode:
        outcome = self.solver.solve(matrix, cross_check=self.config.cross_check, oracle_budget=self.budget)
        tree = outcome.lifted
        if tree is not None and self.config.contract:
            tree = contract_tree(tree)

        fmt = self.config.output_format
        if fmt is OutputFormat.JSON_SUMMARY:
            self.stdout.write(self.solve_summary(matrix, outcome, tree).to_json())
        elif outcome.is_success and tree is not None:
            if fmt is OutputFormat.TRACE:
                self.stdout.write(serialize_trace(outcome.result))
            else:
                self.stdout.write(export_tree(tree, fmt))

        if outcome.cross_check_mismatch:
            self.stderr.write(
                f"cross-check mismatch: reduce={outcome.verdict.value} oracle={outcome.oracle.verdict.value}\n"
            )
            return ExitCode.CROSS_CHECK_MISMATCH
        if not outcome.is_success:
            self.stderr.write(f"{NO_PHYLOGENY_MESSAGE}: {outcome.result.reason}\n")
            return ExitCode.NO_PHYLOGENY
        return ExitCode.SUCCESS

    def solve_summary(self, matrix: BinaryMatrix, outcome: SolveOutcome, tree) -> Summary:
        result = outcome.result
        fields = {
            "verdict": outcome.verdict.value,
            "preprocessing": outcome.report.to_dict(),
            "choices": [ChoiceSummary(**choice.to_dict()) for choice in result.choices],
        }
        if isinstance(result, ReductionTrace):
            fields["reduction"] = result.labels
            fields["events"] = [
                EventSummary(kind=e.kind.value, position=e.position, detail=e.detail) for e in result.events
            ]
        else:
            fields["abort"] = result.to_dict()
        if tree is not None:
            fields["tree"] = export_newick(tree).strip()
        if outcome.validation is not None:
            fields["validation"] = ValidationSummary(**outcome.validation.to_dict())
        if outcome.oracle is not None:
            fields["oracle"] = OracleSummary(**outcome.oracle.to_dict())
            fields["cross_check"] = "mismatch" if outcome.cross_check_mismatch else "agree"
            if outcome.oracle.verdict is Verdict.OVER_BUDGET:
                fields["cross_check"] = "skipped"
        if self.settings.include_timing:
            fields["timing"] = {"total": outcome.elapsed, **outcome.timings}
        return self.summary(matrix, **fields)

    def inspect_graph(self, matrix: BinaryMatrix) -> ExitCode:
        graph = self.solver.graph(matrix)
        if self.config.output_format is OutputFormat.DOT:
            self.stdout.write(graph_to_dot(graph))
        else:
            self.stdout.write(self.summary(matrix, graph=graph.to_dict()).to_json())
        return ExitCode.SUCCESS

    def inspect_hasse(self, matrix: BinaryMatrix) -> ExitCode:
        diagram = self.solver.hasse_at_level(matrix, self.config.level)
        if self.config.output_format is OutputFormat.DOT:
            self.stdout.write(hasse_to_dot(diagram))
        else:
            self.stdout.write(self.summary(matrix, hasse=diagram.to_dict()).to_json())
        return ExitCode.SUCCESS

    def oracle(self, matrix: BinaryMatrix) -> ExitCode:
        result = self.solver.oracle(matrix, self.budget)
        fmt = self.config.output_format
        if fmt is OutputFormat.JSON_SUMMARY:
            summary = self.summary(matrix, verdict=result.verdict.value, oracle=OracleSummary(**result.to_dict()))
            self.stdout.write(summary.to_json())
        elif fmt is OutputFormat.TEXT:
            self.stdout.write(f"verdict: {result.verdict.value}\nunknowns: {result.unknown_count}\n")
            witness = result.witness_matrix()
            if witness is not None:
                self.stdout.write(serialize_matrix(witness))
        elif result.is_solvable:
            tree = self.solver.oracle_tree(matrix, self.budget)
            if tree is not None:
                self.stdout.write(export_tree(tree, fmt))

        if result.verdict is Verdict.OVER_BUDGET:
            self.stderr.write(f"oracle over budget: {result.unknown_count} unknowns > {result.budget}\n")
            return ExitCode.OVER_BUDGET
        if not result.is_solvable:
            self.stderr.write(f"{NO_PHYLOGENY_MESSAGE}\n")
            return ExitCode.NO_PHYLOGENY
        return ExitCode.SUCCESS

    def verify(self, matrix: BinaryMatrix) -> ExitCode:
        text = Path(self.config.tree_path).read_text(encoding="utf-8")
        tree = parse_newick(text, matrix)
        result = validate_tree(tree, matrix)
        if self.config.output_format is OutputFormat.JSON_SUMMARY:
            summary = self.summary(
                matrix,
                verdict="valid" if result.valid else "invalid",
                validation=ValidationSummary(**result.to_dict()),
            )
            self.stdout.write(summary.to_json())
        elif result.valid:
            self.stdout.write("valid\n")
        else:
            self.stdout.write(f"invalid: condition {result.condition}: {result.message}\n")
        return ExitCode.SUCCESS if result.valid else ExitCode.NO_PHYLOGENY


def run(
    config: RunConfig,
    stdin: TextIO,
    stdout: TextIO,
    stderr: TextIO,
    settings: Optional[Settings] = None,
) -> int:
    """
    Execute one CLI request

    Args:
        config: Validated request
        stdin: Matrix source when no input path is given
        stdout: Artifact stream
        stderr: Diagnostics stream

    Returns:
        Process exit code
    """
    return int(CommandRunner(config, stdin, stdout, stderr, settings).run())
