"""
Reduction Service - recursive reduction of a red-black graph to the empty graph
"""
from typing import Callable, List, Optional, Tuple, Union

from src.application.services.hasse_service import (
    build_diagram,
    chain_limit,
    maximal_reducible_graph,
    safe_sources,
)
from src.application.services.realization_service import apply_creduction
from src.config.constants import EventKind, Sign, VertexKind
from src.config.settings import Settings, get_settings
from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.reduction_trace import Abort, ReductionTrace, SourceChoice, TraceEvent
from src.domain.value_objects.signed_character import CReduction, SignedCharacter
from src.error_trace.exceptions import ChainOverflowError, ReductionAborted, ReductionDepthError
from src.utilities.helpers import format_names
from src.utilities.logger import get_logger

logger = get_logger(__name__)

ReductionOutcome = Union[ReductionTrace, Abort]
Path = Tuple[str, ...]


def _vertex_name(graph: RBGraph, node: Tuple[str, int]) -> str:
    kind, i = node
    return graph.species_names[i] if kind == VertexKind.SPECIES.value else graph.character_names[i]


class _Run:
    """Mutable state of one reduce call"""

    def __init__(self, graph: RBGraph, max_backtracks: int):
        self.sequence: List[SignedCharacter] = []
        self.events: List[TraceEvent] = []
        self.choices: List[SourceChoice] = []
        self.backtracks_left = max_backtracks
        self.levels = 0
        # every character-consuming level realizes at least one signed character
        self.depth_bound = 2 * len(graph.characters()) + len(graph.species())

    def event(self, kind: EventKind, detail: str = "") -> None:
        self.events.append(TraceEvent(kind, len(self.sequence), detail))

    def mark(self) -> Tuple[int, int]:
        return len(self.sequence), len(self.events)

    def rollback(self, mark: Tuple[int, int]) -> None:
        del self.sequence[mark[0]:]
        del self.events[mark[1]:]


class ReductionService:
    """
    Computes a successful extended c-reduction or an Abort.

    Each level applies the first matching step: drop singletons, stop on the
    empty graph, lose the smallest free character, gain the smallest universal
    character, split into components, or realize a safe source of the Hasse
    diagram of the maximal characters. When the recursion below a safe source
    aborts, the remaining safe sources of that level are tried while the
    backtrack budget lasts.
    """

    def __init__(self, settings: Optional[Settings] = None):
        settings = settings or get_settings()
        self.chain_limit_factor = settings.chain_limit_factor
        self.max_backtracks = settings.max_backtracks

    def reduce(self, graph: RBGraph) -> ReductionOutcome:
        """
        Reduce graph

        Returns:
            ReductionTrace on success, Abort when some level has no safe source
        """
        return self._execute(graph, self._reduce)

    def reduce_components(self, graph: RBGraph) -> ReductionOutcome:
        """Reduce each connected component in order and concatenate the traces"""
        if len(graph.connected_components()) <= 1:
            return self.reduce(graph)
        return self._execute(graph, self._reduce_parts)

    def _execute(self, graph: RBGraph, body: Callable[[RBGraph, _Run, Path, int], None]) -> ReductionOutcome:
        run = _Run(graph, self.max_backtracks)
        try:
            body(graph, run, (), 0)
        except ReductionAborted as e:
            logger.warning(f"Reduction aborted at {'/'.join(e.path) or 'top'}: {e.message}")
            return Abort(e.message, tuple(e.path), tuple(run.choices), e.diagram)
        trace = ReductionTrace(CReduction(tuple(run.sequence)), tuple(run.events), tuple(run.choices))
        logger.debug(f"Reduction: {' '.join(trace.labels)}")
        return trace

    def _reduce(self, graph: RBGraph, run: _Run, path: Path, depth: int) -> None:
        if depth > run.depth_bound:
            raise ReductionDepthError(
                f"recursion exceeded {run.depth_bound} levels",
                error_code="DEPTH_BOUND",
                details={"path": list(path)},
            )

        graph, removed = graph.remove_singletons()
        if removed:
            run.event(EventKind.SINGLETON_REMOVAL, ",".join(_vertex_name(graph, node) for node in removed))
        if graph.is_empty:
            return

        free = graph.free_characters()
        if free:
            c = free[0]
            run.event(EventKind.FREE_NEGATIVE, graph.character_names[c])
            run.sequence.append(graph.signed(c, Sign.MINUS))
            logger.debug(f"{'/'.join(path)}: free {graph.character_names[c]}")
            self._reduce(graph.realize_negative(c), run, path, depth + 1)
            return

        universal = graph.universal_characters()
        if universal:
            c = universal[0]
            run.event(EventKind.UNIVERSAL_POSITIVE, graph.character_names[c])
            run.sequence.append(graph.signed(c, Sign.PLUS))
            logger.debug(f"{'/'.join(path)}: universal {graph.character_names[c]}")
            self._reduce(graph.realize_positive(c), run, path, depth + 1)
            return

        if not graph.is_connected():
            self._reduce_parts(graph, run, path, depth)
            return

        self._reduce_source(graph, run, path, depth)

    def _reduce_parts(self, graph: RBGraph, run: _Run, path: Path, depth: int) -> None:
        parts = graph.connected_components()
        logger.debug(f"{'/'.join(path)}: {len(parts)} components")
        for index, part in enumerate(parts):
            run.event(EventKind.COMPONENT_SPLIT, str(index))
            self._reduce(part, run, path + (f"component {index}",), depth)

    def _reduce_source(self, graph: RBGraph, run: _Run, path: Path, depth: int) -> None:
        names = graph.character_names
        maximal, reducible = maximal_reducible_graph(graph)
        diagram = build_diagram(reducible)
        level = run.levels
        run.levels += 1
        here = path + (f"level {level}",)

        try:
            candidates = safe_sources(graph, diagram, chain_limit(diagram, self.chain_limit_factor))
        except ChainOverflowError as e:
            raise ReductionAborted(e.message, here, diagram) from e
        if not candidates:
            raise ReductionAborted(
                f"no safe source in the Hasse diagram of {format_names(maximal, names)}", here, diagram
            )

        inactive = set(graph.inactive_characters())
        failure: Optional[ReductionAborted] = None
        for attempt, node in enumerate(candidates):
            if attempt:
                if run.backtracks_left <= 0:
                    break
                run.backtracks_left -= 1
            choice = SourceChoice(level, here, diagram, tuple(candidates), node, attempt)
            first = len(run.choices)
            run.choices.append(choice)
            mark = run.mark()
            if attempt:
                run.event(EventKind.BACKTRACK, f"attempt {attempt}")
            run.event(EventKind.SOURCE_REALIZATION, format_names(node.state, names))
            logger.debug(f"{'/'.join(here)}: source {format_names(node.state, names)} (attempt {attempt})")

            after, extended = apply_creduction(graph, CReduction.positives([c for c in node.key if c in inactive], names))
            run.sequence.extend(extended)
            try:
                self._reduce(after, run, here, depth + 1)
                return
            except ReductionAborted as e:
                for later in run.choices[first:]:
                    later.abandoned = True
                run.rollback(mark)
                failure = e

        assert failure is not None
        raise failure
