"""
Newick codec - species names as node labels, signed characters as edge comments

A node is written as `(children)name[c3+,c4-]`, where the bracket comment
labels the edge entering the node. Species sharing a node are joined by `|`;
the root is named `root` unless species label it. Names holding punctuation,
quotes or whitespace are single-quoted, with inner quotes doubled.
"""
from typing import List, Optional, Tuple

from src.config.constants import ROOT_LABEL, SPECIES_SEPARATOR
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.value_objects.signed_character import SignedCharacter
from src.error_trace.exceptions import TreeParseError

QUOTE = "'"
_RESERVED = set("()[],;:")
_NAME_STOP = _RESERVED | {SPECIES_SEPARATOR, QUOTE}


def _quote(name: str) -> str:
    if any(ch in _NAME_STOP or ch.isspace() for ch in name):
        return QUOTE + name.replace(QUOTE, QUOTE * 2) + QUOTE
    return name


def _node_text(tree: PersistentTree, node: int) -> str:
    children = tree.children(node)
    inner = "(" + ",".join(_node_text(tree, child) for child in children) + ")" if children else ""
    species = tree.species_at(node)
    if species:
        name = SPECIES_SEPARATOR.join(_quote(s) for s in species)
    else:
        name = ROOT_LABEL if node == tree.root else ""
    parent = tree.parent(node)
    comment = ""
    if parent is not None:
        labels = tree.labels(parent, node)
        if labels:
            comment = "[" + ",".join(item.label for item in labels) + "]"
    return inner + name + comment


def export_newick(tree: PersistentTree) -> str:
    """Newick text of the tree; an empty tree gives an empty document"""
    if tree.is_empty:
        return ""
    return _node_text(tree, tree.root) + ";\n"


class _Parser:
    """Recursive-descent reader for the dialect written by export_newick"""

    def __init__(self, text: str, matrix: BinaryMatrix):
        self.text = text
        self.pos = 0
        self.matrix = matrix
        self.known = set(matrix.species_names)

    def error(self, message: str) -> TreeParseError:
        return TreeParseError(
            f"{message} at offset {self.pos}", error_code="NEWICK_PARSE_ERROR", details={"offset": self.pos}
        )

    def peek(self) -> str:
        """Next character outside whitespace"""
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> PersistentTree:
        tree = PersistentTree(self.matrix.root_state.tolist(), self.matrix.character_names)
        children, names, comment = self.node()
        if comment:
            raise self.error("the root cannot carry edge labels")
        if self.peek() != ";":
            raise self.error("expected ';'")
        self.pos += 1
        if self.peek():
            raise self.error("trailing text after ';'")
        self.attach(tree, tree.root, names)
        for child in children:
            self.build(tree, tree.root, child)
        return tree

    def node(self) -> Tuple[list, List[str], Optional[List[SignedCharacter]]]:
        children = []
        if self.peek() == "(":
            self.pos += 1
            children.append(self.node())
            while self.peek() == ",":
                self.pos += 1
                children.append(self.node())
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
        names = [self.name()]
        while self.peek() == SPECIES_SEPARATOR:
            self.pos += 1
            names.append(self.name())
        comment = None
        if self.peek() == "[":
            end = self.text.find("]", self.pos)
            if end < 0:
                raise self.error("unclosed '['")
            body = "".join(self.text[self.pos + 1:end].split())
            self.pos = end + 1
            try:
                comment = [
                    SignedCharacter.from_label(label, self.matrix.character_names)
                    for label in body.split(",") if label
                ]
            except ValueError as e:
                raise self.error(str(e))
        return children, [name for name in names if name], comment

    def name(self) -> str:
        if self.peek() != QUOTE:
            start = self.pos
            while self.pos < len(self.text) and not (
                self.text[self.pos] in _NAME_STOP or self.text[self.pos].isspace()
            ):
                self.pos += 1
            return self.text[start:self.pos]

        parts = []
        self.pos += 1
        while True:
            end = self.text.find(QUOTE, self.pos)
            if end < 0:
                raise self.error("unclosed quoted name")
            parts.append(self.text[self.pos:end])
            self.pos = end + 1
            # a doubled quote stands for one quote inside the name
            if self.text[self.pos:self.pos + 1] != QUOTE:
                return QUOTE.join(parts)
            self.pos += 1

    def build(self, tree: PersistentTree, parent: int, parsed) -> None:
        children, names, comment = parsed
        node = tree.add_child(parent, comment or [])
        self.attach(tree, node, names)
        for child in children:
            self.build(tree, node, child)

    def attach(self, tree: PersistentTree, node: int, names: List[str]) -> None:
        for species in names:
            if species in self.known:
                tree.add_species(node, species)
            elif species != ROOT_LABEL:
                raise self.error(f"unknown species {species}")


def parse_newick(text: str, matrix: BinaryMatrix) -> PersistentTree:
    """
    Read a tree written by export_newick against the matrix it claims to solve

    The root state is 1 exactly on the active set; each child state flips the
    characters of its edge comment toward their signs.

    Raises:
        TreeParseError: malformed text, unknown species or unknown characters
    """
    if not text.strip():
        raise TreeParseError("empty tree", error_code="NEWICK_PARSE_ERROR")
    return _Parser(text, matrix).parse()
