"""
Red-Black Graph Entity

Bipartite graph over species and characters. Inactive characters carry black
edges to the species that have them; active characters carry red edges to the
species of their component that lack them.
"""
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.config.constants import EdgeColor, Sign, VertexKind
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.value_objects.signed_character import SignedCharacter
from src.error_trace.exceptions import (
    InfeasibleRealizationError,
    RealizationPreconditionError,
    UnknownVertexError,
)
from src.utilities.helpers import mask_of

Node = Tuple[str, int]

_S = VertexKind.SPECIES.value
_C = VertexKind.CHARACTER.value


def species_node(s: int) -> Node:
    return (_S, s)


def character_node(c: int) -> Node:
    return (_C, c)


class RBGraph:
    """
    Red-black graph value.

    Public operations return new graphs. The `inplace=True` variants of the
    realizations mutate this graph and are meant for private working copies.
    Vertex indices refer to the row and column positions of the matrix the
    graph was built from.
    """

    def __init__(
        self,
        graph: nx.Graph,
        species_names: Sequence[str],
        character_names: Sequence[str],
        aliases: Optional[Mapping[int, Tuple[str, ...]]] = None,
    ):
        self._graph = graph
        self.species_names: Tuple[str, ...] = tuple(species_names)
        self.character_names: Tuple[str, ...] = tuple(character_names)
        self.aliases: Dict[int, Tuple[str, ...]] = dict(aliases or {})

    # Construction

    @classmethod
    def from_matrix(cls, matrix: BinaryMatrix) -> "RBGraph":
        """Black edge (s,c) iff M[s,c]=1 for inactive c; red edge iff M[s,c]=0 for active c"""
        graph = nx.Graph()
        for s in range(matrix.n_species):
            graph.add_node(species_node(s))
        for c in range(matrix.n_characters):
            graph.add_node(character_node(c), active=c in matrix.active)
        for c in range(matrix.n_characters):
            column = matrix.cells[:, c]
            if c in matrix.active:
                targets, color = np.flatnonzero(column == 0), EdgeColor.RED
            else:
                targets, color = np.flatnonzero(column == 1), EdgeColor.BLACK
            graph.add_edges_from(
                ((character_node(c), species_node(int(s))) for s in targets), color=color
            )
        _drop_isolated(graph)
        return cls(graph, matrix.species_names, matrix.character_names, matrix.aliases)

    def _derive(self, graph: nx.Graph) -> "RBGraph":
        return RBGraph(graph, self.species_names, self.character_names, self.aliases)

    def copy(self) -> "RBGraph":
        return self._derive(self._graph.copy())

    # Queries

    def species(self) -> List[int]:
        return sorted(i for kind, i in self._graph.nodes if kind == _S)

    def characters(self) -> List[int]:
        return sorted(i for kind, i in self._graph.nodes if kind == _C)

    def active_characters(self) -> List[int]:
        return [c for c in self.characters() if self._graph.nodes[character_node(c)]["active"]]

    def inactive_characters(self) -> List[int]:
        return [c for c in self.characters() if not self._graph.nodes[character_node(c)]["active"]]

    def has_character(self, c: int) -> bool:
        return character_node(c) in self._graph

    def has_species(self, s: int) -> bool:
        return species_node(s) in self._graph

    def _character(self, c: int) -> Node:
        node = character_node(c)
        if node not in self._graph:
            raise UnknownVertexError("character", self._name_of_character(c))
        return node

    def _name_of_character(self, c: int) -> str:
        return self.character_names[c] if 0 <= c < len(self.character_names) else str(c)

    def is_active(self, c: int) -> bool:
        return bool(self._graph.nodes[self._character(c)]["active"])

    def neighbors(self, c: int) -> FrozenSet[int]:
        """N(c): species adjacent to character c"""
        return frozenset(i for _, i in self._graph.neighbors(self._character(c)))

    def species_characters(self, s: int, color: Optional[EdgeColor] = None) -> FrozenSet[int]:
        """Characters adjacent to species s, optionally restricted to one edge color"""
        node = species_node(s)
        if node not in self._graph:
            raise UnknownVertexError("species", self.species_names[s] if s < len(self.species_names) else s)
        return frozenset(
            i for _, i in self._graph.neighbors(node)
            if color is None or self._graph.edges[node, (_C, i)]["color"] == color
        )

    def component_species(self, c: int) -> FrozenSet[int]:
        """D(c): species of the connected component containing c"""
        component = nx.node_connected_component(self._graph, self._character(c))
        return frozenset(i for kind, i in component if kind == _S)

    def edge_color(self, s: int, c: int) -> Optional[EdgeColor]:
        data = self._graph.get_edge_data(species_node(s), character_node(c))
        return data["color"] if data else None

    def edges(self) -> List[Tuple[int, int, EdgeColor]]:
        """All edges as (species, character, color), sorted"""
        out = []
        for u, v, color in self._graph.edges(data="color"):
            s, c = (u, v) if u[0] == _S else (v, u)
            out.append((s[1], c[1], color))
        return sorted(out, key=lambda e: (e[1], e[0]))

    @property
    def is_empty(self) -> bool:
        return self._graph.number_of_nodes() == 0

    @property
    def vertex_count(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def edge_count(self) -> int:
        return self._graph.number_of_edges()

    @property
    def size(self) -> int:
        """Vertices plus edges; strictly decreases along a reduction"""
        return self.vertex_count + self.edge_count

    @property
    def is_nontrivial(self) -> bool:
        return self.vertex_count > 1

    def is_connected(self) -> bool:
        return not self.is_empty and nx.is_connected(self._graph)

    def species_mask(self) -> int:
        return mask_of(self.species())

    def neighbour_mask(self, c: int) -> int:
        """N(c) as a species bitmask"""
        return mask_of(i for _, i in self._graph.neighbors(character_node(c)))

    def associated_mask(self, c: int) -> int:
        """Column of c in the associated matrix, as a species bitmask"""
        neighbours = mask_of(i for _, i in self._graph.neighbors(character_node(c)))
        if self._graph.nodes[character_node(c)]["active"]:
            return self.species_mask() & ~neighbours
        return neighbours

    def associated_matrix(self) -> BinaryMatrix:
        """M[s,c]=1 iff (s,c) is black, or c is active and (s,c) is not an edge"""
        species = self.species()
        characters = self.characters()
        row_of = {s: i for i, s in enumerate(species)}
        col_of = {c: j for j, c in enumerate(characters)}
        cells = np.zeros((len(species), len(characters)), dtype=np.uint8)
        active = set()
        for c in characters:
            node = character_node(c)
            if self._graph.nodes[node]["active"]:
                active.add(col_of[c])
                cells[:, col_of[c]] = 1
                for _, s in self._graph.neighbors(node):
                    cells[row_of[s], col_of[c]] = 0
            else:
                for _, s in self._graph.neighbors(node):
                    cells[row_of[s], col_of[c]] = 1
        return BinaryMatrix(
            species_names=tuple(self.species_names[s] for s in species),
            character_names=tuple(self.character_names[c] for c in characters),
            cells=cells,
            active=frozenset(active),
            aliases={col_of[c]: names for c, names in self.aliases.items() if c in col_of},
        )

    # Realization

    def realize_positive(self, c: int, *, inplace: bool = False) -> "RBGraph":
        """
        Realize c+: red edges to D(c) minus N(c), drop the black edges of c,
        then drop isolated vertices.

        Raises:
            UnknownVertexError: c is not in the graph
            RealizationPreconditionError: c is already active
        """
        node = self._character(c)
        if self._graph.nodes[node]["active"]:
            raise RealizationPreconditionError(
                f"{self._name_of_character(c)} is active; only {self._name_of_character(c)}- can be realized",
                error_code="ALREADY_ACTIVE",
            )
        graph = self._graph if inplace else self._graph.copy()
        component = nx.node_connected_component(graph, node)
        adjacent = set(graph.neighbors(node))
        graph.remove_edges_from([(node, s) for s in adjacent])
        graph.add_edges_from(
            ((node, s) for s in component if s[0] == _S and s not in adjacent),
            color=EdgeColor.RED,
        )
        graph.nodes[node]["active"] = True
        _drop_isolated(graph, candidates=adjacent | {node})
        return self if inplace else self._derive(graph)

    def realize_negative(self, c: int, *, inplace: bool = False) -> "RBGraph":
        """
        Realize c-: delete every edge of a free active character, then drop
        isolated vertices.

        Raises:
            UnknownVertexError: c is not in the graph
            RealizationPreconditionError: c is inactive
            InfeasibleRealizationError: c is not free in its component
        """
        node = self._character(c)
        if not self._graph.nodes[node]["active"]:
            raise RealizationPreconditionError(
                f"{self._name_of_character(c)} is inactive; it must be gained before it is lost",
                error_code="NOT_ACTIVE",
            )
        adjacent = set(self._graph.neighbors(node))
        component = nx.node_connected_component(self._graph, node)
        missing = [s for s in component if s[0] == _S and s not in adjacent]
        if missing:
            raise InfeasibleRealizationError(
                f"{self._name_of_character(c)} is not free: "
                f"{len(missing)} species of its component are not red-adjacent",
                error_code="NOT_FREE",
                details={"character": self._name_of_character(c),
                         "species": sorted(self.species_names[s[1]] for s in missing)},
            )
        graph = self._graph if inplace else self._graph.copy()
        graph.remove_edges_from([(node, s) for s in adjacent])
        _drop_isolated(graph, candidates=adjacent | {node})
        return self if inplace else self._derive(graph)

    def realize(self, signed: SignedCharacter, *, inplace: bool = False) -> "RBGraph":
        if signed.sign is Sign.PLUS:
            return self.realize_positive(signed.character, inplace=inplace)
        return self.realize_negative(signed.character, inplace=inplace)

    def signed(self, c: int, sign: Sign) -> SignedCharacter:
        """Signed character carrying this graph's display name for c"""
        return SignedCharacter(c, sign, self.character_names[c])

    # Component-scoped character classes

    def _component_species_masks(self) -> Dict[Node, int]:
        """Map every vertex to the species bitmask of its component"""
        owner: Dict[Node, int] = {}
        for component in nx.connected_components(self._graph):
            mask = mask_of(i for kind, i in component if kind == _S)
            for node in component:
                owner[node] = mask
        return owner

    def free_characters(self) -> List[int]:
        """Active characters red-adjacent to every species of their component, ascending"""
        owner = self._component_species_masks()
        return [c for c in self.active_characters() if self.neighbour_mask(c) == owner[character_node(c)]]

    def universal_characters(self) -> List[int]:
        """Inactive characters black-adjacent to every species of their component, ascending"""
        owner = self._component_species_masks()
        return [c for c in self.inactive_characters() if self.neighbour_mask(c) == owner[character_node(c)]]

    def connected_components(self) -> List["RBGraph"]:
        """Maximal connected subgraphs, ordered by smallest species index"""
        parts = [set(component) for component in nx.connected_components(self._graph)]

        def key(component):
            species = [i for kind, i in component if kind == _S]
            characters = [i for kind, i in component if kind == _C]
            return (min(species) if species else float("inf"), min(characters) if characters else -1)

        parts.sort(key=key)
        return [self._derive(self._graph.subgraph(part).copy()) for part in parts]

    def has_red_sigma(self) -> bool:
        """
        True iff two active characters c1, c2 and three species induce the red
        path s1-c1-s2-c2-s3: the red neighbourhoods meet and neither contains
        the other.
        """
        masks = [self.neighbour_mask(c) for c in self.active_characters()]
        for a, b in combinations(masks, 2):
            if a & b and a & ~b and b & ~a:
                return True
        return False

    def red_sigma_witness(self) -> Optional[Tuple[int, int]]:
        """The first pair of active characters inducing a red sigma, if any"""
        active = self.active_characters()
        for c1, c2 in combinations(active, 2):
            a, b = self.neighbour_mask(c1), self.neighbour_mask(c2)
            if a & b and a & ~b and b & ~a:
                return (c1, c2)
        return None

    # Subgraphs

    def induced_subgraph(self, characters: Iterable[int]) -> "RBGraph":
        """Subgraph on the given characters and the species adjacent to them"""
        nodes = set()
        for c in characters:
            node = self._character(c)
            nodes.add(node)
            nodes.update(self._graph.neighbors(node))
        return self._derive(self._graph.subgraph(nodes).copy())

    def remove_singletons(self) -> Tuple["RBGraph", List[Node]]:
        """Drop isolated vertices; returns the new graph and the removed vertices"""
        isolated = sorted(node for node, degree in self._graph.degree() if degree == 0)
        if not isolated:
            return self, []
        graph = self._graph.copy()
        graph.remove_nodes_from(isolated)
        return self._derive(graph), isolated

    # Value semantics

    def _signature(self):
        nodes = frozenset(
            (node, bool(data.get("active", False))) for node, data in self._graph.nodes(data=True)
        )
        edges = frozenset((frozenset((u, v)), color) for u, v, color in self._graph.edges(data="color"))
        return nodes, edges

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RBGraph):
            return NotImplemented
        return self._signature() == other._signature()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"RBGraph(species={len(self.species())}, characters={len(self.characters())}, "
            f"active={[self.character_names[c] for c in self.active_characters()]}, edges={self.edge_count})"
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert graph to dictionary"""
        return {
            "species": [self.species_names[s] for s in self.species()],
            "characters": [
                {"name": self.character_names[c], "active": self.is_active(c)} for c in self.characters()
            ],
            "edges": [
                {"species": self.species_names[s], "character": self.character_names[c], "color": color.value}
                for s, c, color in self.edges()
            ],
        }


def _drop_isolated(graph: nx.Graph, candidates: Optional[Iterable[Node]] = None) -> None:
    """Remove degree-0 vertices, looking only at candidates when given"""
    pool = graph.nodes if candidates is None else [n for n in candidates if n in graph]
    graph.remove_nodes_from([node for node in list(pool) if graph.degree(node) == 0])
