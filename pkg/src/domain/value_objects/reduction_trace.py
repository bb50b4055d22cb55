"""
Reduction Trace Value Objects - outcome of a recursive reduction
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.config.constants import EventKind
from src.domain.entities.hasse_diagram import DiagramNode, HasseDiagram
from src.domain.value_objects.signed_character import CReduction
from src.utilities.helpers import format_names


@dataclass(frozen=True)
class TraceEvent:
    """Branch annotation; `position` is the index of the first signed character it covers"""

    kind: EventKind
    position: int
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind.value} {self.detail}".strip()


@dataclass
class SourceChoice:
    """One attempt at a safe-source level"""

    level: int
    path: Tuple[str, ...]
    diagram: HasseDiagram = field(repr=False)
    candidates: Tuple[DiagramNode, ...]
    chosen: DiagramNode
    attempt: int = 0
    abandoned: bool = False

    def to_dict(self) -> Dict[str, Any]:
        names = self.diagram.character_names
        return {
            "level": self.level,
            "path": list(self.path),
            "candidates": [format_names(node.state, names) for node in self.candidates],
            "chosen": format_names(self.chosen.state, names),
            "attempt": self.attempt,
            "abandoned": self.abandoned,
        }


@dataclass(frozen=True)
class ReductionTrace:
    """Successful extended c-reduction with its branch history"""

    sequence: CReduction
    events: Tuple[TraceEvent, ...] = ()
    choices: Tuple[SourceChoice, ...] = ()

    @property
    def is_success(self) -> bool:
        return True

    @property
    def labels(self) -> List[str]:
        return self.sequence.labels

    @property
    def negative_count(self) -> int:
        return len(self.sequence.negatives)

    def events_at(self, position: int) -> List[TraceEvent]:
        return [event for event in self.events if event.position == position]

    def to_dict(self) -> Dict[str, Any]:
        """Convert trace to dictionary"""
        return {
            "sequence": self.labels,
            "events": [
                {"kind": e.kind.value, "position": e.position, "detail": e.detail} for e in self.events
            ],
            "choices": [choice.to_dict() for choice in self.choices],
        }


@dataclass(frozen=True)
class Abort:
    """No safe source existed at some level; `path` locates that level"""

    reason: str
    path: Tuple[str, ...] = ()
    choices: Tuple[SourceChoice, ...] = ()
    diagram: Optional[HasseDiagram] = field(default=None, repr=False, compare=False)

    @property
    def is_success(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, Any]:
        """Convert abort to dictionary"""
        return {
            "reason": self.reason,
            "path": list(self.path),
            "choices": [choice.to_dict() for choice in self.choices],
        }
