"""
Persistent Tree Entity - rooted tree with state vectors, species labels and signed edge labels
"""
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.domain.value_objects.signed_character import SignedCharacter

State = Tuple[int, ...]


class PersistentTree:
    """
    Rooted tree over integer node ids, root 0.

    Nodes carry a `state` tuple of length m and a `species` list; edges carry
    an ordered `labels` list of signed characters.
    """

    ROOT = 0

    def __init__(self, root_state: Sequence[int], character_names: Sequence[str]):
        self.character_names: Tuple[str, ...] = tuple(character_names)
        self.tree = nx.DiGraph()
        self.tree.add_node(self.ROOT, state=tuple(int(v) for v in root_state), species=[])

    @property
    def root(self) -> int:
        return self.ROOT

    @property
    def n_characters(self) -> int:
        return len(self.character_names)

    def __len__(self) -> int:
        return self.tree.number_of_nodes()

    # Construction

    def add_child(
        self,
        parent: int,
        labels: Sequence[SignedCharacter],
        state: Optional[Sequence[int]] = None,
    ) -> int:
        """
        Attach a child below parent

        When `state` is omitted, it is the parent state with every labelled
        character flipped to its sign.
        """
        if state is None:
            flipped = list(self.state(parent))
            for item in labels:
                flipped[item.character] = 1 if item.is_positive else 0
            state = flipped
        node = self.tree.number_of_nodes()
        while node in self.tree:
            node += 1
        self.tree.add_node(node, state=tuple(int(v) for v in state), species=[])
        self.tree.add_edge(parent, node, labels=list(labels))
        return node

    def add_species(self, node: int, name: str) -> None:
        if name not in self.tree.nodes[node]["species"]:
            self.tree.nodes[node]["species"].append(name)

    # Queries

    def nodes(self) -> List[int]:
        """Nodes in preorder, children in insertion order"""
        return list(nx.dfs_preorder_nodes(self.tree, self.ROOT))

    def edges(self) -> List[Tuple[int, int]]:
        return [(self.parent(v), v) for v in self.nodes() if v != self.ROOT]

    def children(self, node: int) -> List[int]:
        return list(self.tree.successors(node))

    def parent(self, node: int) -> Optional[int]:
        preds = list(self.tree.predecessors(node))
        return preds[0] if preds else None

    def state(self, node: int) -> State:
        return self.tree.nodes[node]["state"]

    def species_at(self, node: int) -> List[str]:
        return list(self.tree.nodes[node]["species"])

    def labels(self, parent: int, child: int) -> List[SignedCharacter]:
        return list(self.tree.edges[parent, child]["labels"])

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when a lies on the root path of b (a node is its own ancestor)"""
        return a == b or nx.has_path(self.tree, a, b)

    def labelled_edges(self) -> Iterator[Tuple[int, int, SignedCharacter]]:
        """(parent, child, label) for every label, preorder"""
        for u, v in self.edges():
            for item in self.tree.edges[u, v]["labels"]:
                yield u, v, item

    def species_nodes(self) -> Dict[str, int]:
        """Species name to the node it labels"""
        out: Dict[str, int] = {}
        for node in self.nodes():
            for name in self.tree.nodes[node]["species"]:
                out.setdefault(name, node)
        return out

    def leaves(self) -> List[int]:
        return [node for node in self.nodes() if self.tree.out_degree(node) == 0]

    @property
    def is_empty(self) -> bool:
        """A bare root without species"""
        return len(self) == 1 and not self.tree.nodes[self.ROOT]["species"]

    def positive_labels(self) -> List[str]:
        return sorted({item.label for _, _, item in self.labelled_edges() if item.is_positive})

    def negative_labels(self) -> List[str]:
        return sorted({item.label for _, _, item in self.labelled_edges() if not item.is_positive})

    def copy(self) -> "PersistentTree":
        out = PersistentTree(self.state(self.ROOT), self.character_names)
        out.tree = nx.DiGraph()
        for node, data in self.tree.nodes(data=True):
            out.tree.add_node(node, state=data["state"], species=list(data["species"]))
        for u, v, data in self.tree.edges(data=True):
            out.tree.add_edge(u, v, labels=list(data["labels"]))
        return out

    def __str__(self) -> str:
        lines = [f"Persistent tree: {len(self)} nodes"]
        for u, v in self.edges():
            labels = ",".join(item.label for item in self.labels(u, v))
            lines.append(f"{u} -> {v} [{labels}] {','.join(self.species_at(v))}")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        """Convert tree to dictionary"""
        return {
            "root": self.ROOT,
            "characters": list(self.character_names),
            "nodes": [
                {"id": node, "state": "".join(map(str, self.state(node))), "species": self.species_at(node)}
                for node in self.nodes()
            ],
            "edges": [
                {"parent": u, "child": v, "labels": [item.label for item in self.labels(u, v)]}
                for u, v in self.edges()
            ],
        }
