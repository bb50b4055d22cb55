"""
Realization Service - application of (extended) c-reductions to red-black graphs
"""
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Tuple

from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.signed_character import CReduction, SignedCharacter
from src.config.constants import Sign
from src.error_trace.exceptions import (
    InfeasibleReductionError,
    RealizationError,
    RealizationPreconditionError,
    UnknownVertexError,
)
from src.utilities.logger import get_logger

logger = get_logger(__name__)


@dataclass
class RealizationStep:
    """
    One realized signed character.

    `graph` is the working graph right after the step; it keeps changing
    while the iteration continues, so copy it to keep a snapshot.
    """

    position: int
    signed: SignedCharacter
    graph: RBGraph
    automatic: bool = False


StepObserver = Callable[[RealizationStep], None]


def _free_closure(work: RBGraph, position: int) -> Iterator[RealizationStep]:
    """Realize free characters negatively, smallest index first, until none is left"""
    while True:
        free = work.free_characters()
        if not free:
            return
        c = free[0]
        work.realize_negative(c, inplace=True)
        yield RealizationStep(position, work.signed(c, Sign.MINUS), work, automatic=True)
        position += 1


def iter_creduction(graph: RBGraph, reduction: CReduction) -> Iterator[RealizationStep]:
    """
    Lazily apply a positive c-reduction on a private copy of graph

    Every positive is followed by the negatives of the characters it made free.

    Raises:
        RealizationPreconditionError: the reduction has a negative character
        InfeasibleReductionError: a positive cannot be realized
    """
    if not reduction.is_positive:
        raise RealizationPreconditionError("a c-reduction to apply must contain only positive characters")
    work = graph.copy()
    position = 0
    for index, item in enumerate(reduction):
        try:
            work.realize_positive(item.character, inplace=True)
        except (RealizationError, UnknownVertexError) as e:
            raise InfeasibleReductionError(
                f"c-reduction is infeasible at position {index} ({item.label}): {e.message}",
                position=index,
                cause=e,
            ) from e
        yield RealizationStep(position, work.signed(item.character, Sign.PLUS), work)
        position += 1
        for step in _free_closure(work, position):
            position += 1
            yield step


def apply_creduction(
    graph: RBGraph,
    reduction: CReduction,
    observer: Optional[StepObserver] = None,
) -> Tuple[RBGraph, CReduction]:
    """
    Apply a positive c-reduction and return the final graph and the extended c-reduction

    Args:
        graph: Starting graph (left untouched)
        reduction: Positive characters in realization order
        observer: Called after every realized signed character

    Returns:
        (final graph, extended c-reduction with the interleaved negatives)
    """
    extended: List[SignedCharacter] = []
    final = graph.copy() if not len(reduction) else None
    for step in iter_creduction(graph, reduction):
        extended.append(step.signed)
        if observer:
            observer(step)
        final = step.graph
    return final, CReduction(tuple(extended))


def replay(
    graph: RBGraph,
    sequence: Iterable[SignedCharacter],
    observer: Optional[StepObserver] = None,
) -> RBGraph:
    """
    Apply signed characters literally, in the given order

    Raises:
        InfeasibleReductionError: with the position of the first failing character
    """
    work = graph.copy()
    for index, item in enumerate(sequence):
        try:
            work.realize(item, inplace=True)
        except (RealizationError, UnknownVertexError) as e:
            raise InfeasibleReductionError(
                f"sequence is infeasible at position {index} ({item.label}): {e.message}",
                position=index,
                cause=e,
            ) from e
        if observer:
            observer(RealizationStep(index, item, work))
    return work
