"""
Tree Service - persistent phylogeny construction, validation and post-processing
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Union

import numpy as np

from src.adapters.formats.dot_writer import tree_to_dot
from src.adapters.formats.newick import export_newick
from src.config.constants import OutputFormat
from src.domain.entities.binary_matrix import BinaryMatrix, PreprocessReport
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.reduction_trace import ReductionTrace
from src.domain.value_objects.signed_character import CReduction, SignedCharacter
from src.error_trace.exceptions import ConfigurationError, RealizationError, TreeBuildError, UnknownVertexError
from src.utilities.logger import get_logger

logger = get_logger(__name__)

TraceLike = Union[ReductionTrace, CReduction, Iterable[SignedCharacter]]


@dataclass(frozen=True)
class TreeValidation:
    """Outcome of validate_tree; `condition` is the first violated condition (1-5)"""

    valid: bool
    condition: Optional[int] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> Dict[str, object]:
        return {"valid": self.valid, "condition": self.condition, "message": self.message}


_VALID = TreeValidation(True)


def _sequence_of(trace: TraceLike) -> CReduction:
    if isinstance(trace, ReductionTrace):
        return trace.sequence
    if isinstance(trace, CReduction):
        return trace
    return CReduction(tuple(trace))


def build_tree(matrix: BinaryMatrix, trace: TraceLike, validate: bool = True) -> PersistentTree:
    """
    Build the persistent phylogeny of a successful reduction

    The trace is replayed on the red-black graph of the matrix. All species of
    a connected component sit on the same tree node; each signed character
    gets a new child of that node holding the species of its component, and a
    species is placed where it becomes isolated.

    Args:
        matrix: Preprocessed matrix the trace was computed on
        trace: Successful extended c-reduction
        validate: Run validate_tree on the result

    Returns:
        The tree

    Raises:
        TreeBuildError: the trace does not empty the graph, a species is
            unplaced, or validation fails
    """
    sequence = _sequence_of(trace)
    tree = PersistentTree(matrix.root_state.tolist(), matrix.character_names)
    work = RBGraph.from_matrix(matrix)
    at: Dict[int, int] = {s: tree.root for s in range(matrix.n_species)}
    placed = set()

    def place(s: int, node: int) -> None:
        if tree.state(node) != tuple(int(v) for v in matrix.row(s)):
            raise TreeBuildError(
                f"species {matrix.species_names[s]} isolated at a node whose state differs from its row",
                error_code="STATE_MISMATCH",
                details={"species": [matrix.species_names[s]]},
            )
        tree.add_species(node, matrix.species_names[s])
        placed.add(s)

    for s in range(matrix.n_species):
        if not work.has_species(s):
            place(s, tree.root)

    for position, item in enumerate(sequence):
        try:
            component = sorted(work.component_species(item.character))
            parents = {at[s] for s in component}
            if len(parents) != 1:
                raise TreeBuildError(
                    f"component of {item.label} spans {len(parents)} tree nodes",
                    error_code="SPLIT_COMPONENT",
                    details={"position": position},
                )
            child = tree.add_child(parents.pop(), [item])
            work.realize(item, inplace=True)
        except (RealizationError, UnknownVertexError) as e:
            raise TreeBuildError(
                f"trace is infeasible at position {position} ({item.label}): {e.message}",
                error_code="INFEASIBLE_TRACE",
                details={"position": position},
            ) from e
        for s in component:
            at[s] = child
            if not work.has_species(s):
                place(s, child)

    unplaced = [matrix.species_names[s] for s in range(matrix.n_species) if s not in placed]
    if unplaced or not work.is_empty:
        raise TreeBuildError(
            f"trace leaves species unplaced: {', '.join(unplaced) or 'graph not empty'}",
            error_code="UNPLACED_SPECIES",
            details={"species": unplaced},
        )

    if validate:
        result = validate_tree(tree, matrix)
        if not result:
            raise TreeBuildError(
                f"built tree violates condition {result.condition}: {result.message}",
                error_code="INVALID_TREE",
                details=result.to_dict(),
            )
    logger.debug(f"Built tree with {len(tree)} nodes")
    return tree


def validate_tree(tree: PersistentTree, matrix: BinaryMatrix) -> TreeValidation:
    """
    Check a tree against the persistent phylogeny conditions for (M, A)

    1. every state has length m over {0,1}
    2. the root state is 1 exactly on A
    3. every edge flips exactly its labelled characters, each towards its sign
    4. each character has at most one + and one - edge, + above - on one path
    5. every species of M labels a node whose state equals its row
    """
    m = matrix.n_characters
    if tree.character_names != matrix.character_names:
        return TreeValidation(False, 1, "tree and matrix name different characters")
    for node in tree.nodes():
        state = tree.state(node)
        if len(state) != m or any(v not in (0, 1) for v in state):
            return TreeValidation(False, 1, f"node {node} has a state that is not a 0/1 vector of length {m}")

    if tree.state(tree.root) != tuple(int(v) for v in matrix.root_state):
        return TreeValidation(False, 2, "root state differs from the active set")

    for u, v in tree.edges():
        labels = tree.labels(u, v)
        if not labels:
            return TreeValidation(False, 3, f"edge {u}->{v} has no label")
        characters = [item.character for item in labels]
        if len(set(characters)) != len(characters):
            return TreeValidation(False, 3, f"edge {u}->{v} labels a character twice")
        parent, child = tree.state(u), tree.state(v)
        for item in labels:
            before, after = (0, 1) if item.is_positive else (1, 0)
            if parent[item.character] != before or child[item.character] != after:
                return TreeValidation(False, 3, f"edge {u}->{v} label {item.label} does not match the states")
        for j in range(m):
            if j not in characters and parent[j] != child[j]:
                return TreeValidation(
                    False, 3, f"edge {u}->{v} changes {matrix.character_names[j]} without a label"
                )

    plus: Dict[int, List[int]] = {}
    minus: Dict[int, List[int]] = {}
    for u, v, item in tree.labelled_edges():
        (plus if item.is_positive else minus).setdefault(item.character, []).append(v)
    for c in range(m):
        gains, losses = plus.get(c, []), minus.get(c, [])
        name = matrix.character_names[c]
        if len(gains) > 1 or len(losses) > 1:
            return TreeValidation(False, 4, f"{name} changes state on more than two edges")
        if gains and losses:
            below_gain, loss_parent = gains[0], tree.parent(losses[0])
            if loss_parent is None or not tree.is_ancestor(below_gain, loss_parent):
                return TreeValidation(False, 4, f"{name}- is not below {name}+ on a root path")

    species_nodes: Dict[str, List[int]] = {}
    for node in tree.nodes():
        for name in tree.species_at(node):
            species_nodes.setdefault(name, []).append(node)
    for s, name in enumerate(matrix.species_names):
        row = tuple(int(v) for v in matrix.row(s))
        if not any(tree.state(node) == row for node in species_nodes.get(name, [])):
            return TreeValidation(False, 5, f"no node labelled {name} carries its row")

    return _VALID


def positive_traversal(tree: PersistentTree) -> CReduction:
    """Positive characters of the tree in preorder, parents before descendants"""
    return CReduction(tuple(item for _, _, item in tree.labelled_edges() if item.is_positive))


def contract_tree(tree: PersistentTree) -> PersistentTree:
    """Merge every unlabelled single-child node into a multi-label edge"""
    out = tree.copy()
    changed = True
    while changed:
        changed = False
        for node in out.nodes():
            if node == out.root or out.species_at(node):
                continue
            children = out.children(node)
            if len(children) != 1:
                continue
            parent, child = out.parent(node), children[0]
            labels = out.labels(parent, node) + out.labels(node, child)
            out.tree.remove_node(node)
            out.tree.add_edge(parent, child, labels=labels)
            changed = True
            break
    return _renumber(out)


def _renumber(tree: PersistentTree) -> PersistentTree:
    """Copy with node ids in preorder, children kept in order"""
    out = PersistentTree(tree.state(tree.root), tree.character_names)
    for name in tree.species_at(tree.root):
        out.add_species(out.root, name)
    ids = {tree.root: out.root}
    for node in tree.nodes():
        if node == tree.root:
            continue
        parent = tree.parent(node)
        ids[node] = out.add_child(ids[parent], tree.labels(parent, node), tree.state(node))
        for name in tree.species_at(node):
            out.add_species(ids[node], name)
    return out


def lift_tree(tree: PersistentTree, original: BinaryMatrix, report: PreprocessReport) -> PersistentTree:
    """
    Re-expand a tree built on a preprocessed matrix to the original matrix

    Removed null characters keep their root value everywhere, merged
    duplicates copy the state of the kept column and gain their own label next
    to it on the same edge, and null species label the root.
    """
    kept_of = {dropped: kept for kept, dropped in report.merged_duplicate_columns}
    reduced = {name: j for j, name in enumerate(tree.character_names)}
    root = original.root_state
    source: List[Optional[int]] = [
        reduced.get(kept_of.get(name, name)) for name in original.character_names
    ]
    expand: Dict[int, List[int]] = {}
    for j, r in enumerate(source):
        if r is not None:
            expand.setdefault(r, []).append(j)

    def lift_state(state) -> List[int]:
        return [int(state[r]) if r is not None else int(root[j]) for j, r in enumerate(source)]

    out = PersistentTree(lift_state(tree.state(tree.root)), original.character_names)
    ids = {tree.root: out.root}
    for node in tree.nodes():
        if node != tree.root:
            parent = tree.parent(node)
            labels = [
                SignedCharacter(j, item.sign, original.character_names[j])
                for item in tree.labels(parent, node)
                for j in expand.get(item.character, [])
            ]
            ids[node] = out.add_child(ids[parent], labels, lift_state(tree.state(node)))
        for name in tree.species_at(node):
            out.add_species(ids[node], name)
    for name in report.removed_null_species:
        out.add_species(out.root, name)

    if not np.array_equal(np.array(out.state(out.root)), root):
        logger.warning("Lifted root state differs from the original active set")
    return out


def export_tree(tree: PersistentTree, output_format: OutputFormat) -> str:
    """Newick or DOT text of the tree; an empty tree gives an empty document"""
    if output_format is OutputFormat.NEWICK:
        return export_newick(tree)
    if output_format is OutputFormat.DOT:
        return tree_to_dot(tree)
    raise ConfigurationError(f"trees are exported as newick or dot, not {output_format.value}")
