"""
Hasse Diagram Entity - covering DAG of species states of a maximal reducible graph
"""
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from src.utilities.helpers import format_names


@dataclass(frozen=True)
class DiagramNode:
    """A species state (set of maximal characters) and the species sharing it"""

    state: FrozenSet[int]
    species: Tuple[int, ...]

    @property
    def key(self) -> Tuple[int, ...]:
        """Lexicographic sort key: the state's sorted character indices"""
        return tuple(sorted(self.state))


@dataclass(frozen=True)
class Chain:
    """Source-to-sink path, as node indices of its diagram"""

    nodes: Tuple[int, ...]
    diagram: Optional["HasseDiagram"] = field(default=None, compare=False, repr=False)

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def sink(self) -> int:
        return self.nodes[-1]

    @property
    def is_trivial(self) -> bool:
        return len(self.nodes) == 1


class HasseDiagram:
    """
    Nodes are distinct species states in lexicographic order; an arc (u, v)
    exists when state u is covered by state v, labelled by v minus u.
    """

    def __init__(
        self,
        nodes: Sequence[DiagramNode],
        arcs: Sequence[Tuple[int, int]],
        species_names: Sequence[str],
        character_names: Sequence[str],
    ):
        self.nodes: Tuple[DiagramNode, ...] = tuple(nodes)
        self.species_names = tuple(species_names)
        self.character_names = tuple(character_names)
        self._dag = nx.DiGraph()
        self._dag.add_nodes_from(range(len(self.nodes)))
        for u, v in arcs:
            self._dag.add_edge(u, v, label=self.nodes[v].state - self.nodes[u].state)

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def characters(self) -> FrozenSet[int]:
        """Union of all node states"""
        out: FrozenSet[int] = frozenset()
        for node in self.nodes:
            out = out | node.state
        return out

    @property
    def species_count(self) -> int:
        return sum(len(node.species) for node in self.nodes)

    def arcs(self) -> List[Tuple[int, int]]:
        return sorted(self._dag.edges())

    def label(self, u: int, v: int) -> FrozenSet[int]:
        return self._dag.edges[u, v]["label"]

    def successors(self, u: int) -> List[int]:
        return sorted(self._dag.successors(u))

    def sources(self) -> List[int]:
        return [u for u in range(len(self.nodes)) if self._dag.in_degree(u) == 0]

    def sinks(self) -> List[int]:
        return [u for u in range(len(self.nodes)) if self._dag.out_degree(u) == 0]

    @property
    def has_arcs(self) -> bool:
        return self._dag.number_of_edges() > 0

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self._dag)

    def index_of(self, state: FrozenSet[int]) -> int:
        for i, node in enumerate(self.nodes):
            if node.state == state:
                return i
        raise KeyError(state)

    def state_name(self, u: int) -> str:
        return format_names(self.nodes[u].state, self.character_names)

    def species_of_node(self, u: int) -> List[str]:
        return [self.species_names[s] for s in self.nodes[u].species]

    def to_dict(self) -> Dict[str, Any]:
        """Convert diagram to dictionary"""
        return {
            "nodes": [
                {"state": [self.character_names[c] for c in node.key], "species": self.species_of_node(i)}
                for i, node in enumerate(self.nodes)
            ],
            "arcs": [
                {
                    "from": self.state_name(u),
                    "to": self.state_name(v),
                    "label": [self.character_names[c] for c in sorted(self.label(u, v))],
                }
                for u, v in self.arcs()
            ],
            "sources": [self.state_name(u) for u in self.sources()],
            "sinks": [self.state_name(u) for u in self.sinks()],
        }
