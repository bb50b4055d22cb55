"""Domain layer - Matrices, graphs, diagrams, trees and reduction values"""
from src.domain.entities.binary_matrix import BinaryMatrix, PreprocessReport
from src.domain.entities.red_black_graph import RBGraph
from src.domain.entities.hasse_diagram import Chain, DiagramNode, HasseDiagram
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.entities.extended_matrix import ExtendedMatrix
from src.domain.value_objects.signed_character import CReduction, SignedCharacter
from src.domain.value_objects.reduction_trace import Abort, ReductionTrace, SourceChoice, TraceEvent

__all__ = [
    "BinaryMatrix",
    "PreprocessReport",
    "RBGraph",
    "Chain",
    "DiagramNode",
    "HasseDiagram",
    "PersistentTree",
    "ExtendedMatrix",
    "CReduction",
    "SignedCharacter",
    "Abort",
    "ReductionTrace",
    "SourceChoice",
    "TraceEvent"
]
