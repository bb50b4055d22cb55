"""
Trace codec - one signed character per line, events as `#` comments before the step they annotate
"""
from typing import List, Sequence

from src.config.constants import COMMENT_PREFIX, EventKind
from src.domain.value_objects.reduction_trace import ReductionTrace, TraceEvent
from src.domain.value_objects.signed_character import CReduction, SignedCharacter
from src.error_trace.exceptions import TraceParseError

_KINDS = {kind.value: kind for kind in EventKind}


def serialize_trace(trace: ReductionTrace) -> str:
    lines: List[str] = []
    sequence = list(trace.sequence)
    for position in range(len(sequence) + 1):
        for event in trace.events_at(position):
            lines.append(f"{COMMENT_PREFIX} {event}")
        if position < len(sequence):
            lines.append(sequence[position].label)
    return "\n".join(lines) + "\n" if lines else ""


def parse_trace(text: str, character_names: Sequence[str]) -> ReductionTrace:
    """
    Read a serialized trace

    Comment lines naming a known event kind become events at the position of
    the next signed character; other comments are ignored.

    Raises:
        TraceParseError: a line is neither a comment nor a known signed character
    """
    sequence: List[SignedCharacter] = []
    events: List[TraceEvent] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(COMMENT_PREFIX):
            kind, _, detail = line[len(COMMENT_PREFIX):].strip().partition(" ")
            if kind in _KINDS:
                events.append(TraceEvent(_KINDS[kind], len(sequence), detail))
            continue
        try:
            sequence.append(SignedCharacter.from_label(line, character_names))
        except ValueError as e:
            raise TraceParseError(str(e), line=number, column=1)
    try:
        reduction = CReduction(tuple(sequence))
    except ValueError as e:
        raise TraceParseError(str(e))
    return ReductionTrace(reduction, tuple(events))
