"""
DOT Writer - Graphviz text for red-black graphs, Hasse diagrams and trees
"""
from typing import List

from src.config.constants import ROOT_LABEL, SPECIES_SEPARATOR, EdgeColor
from src.domain.entities.hasse_diagram import HasseDiagram
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.entities.red_black_graph import RBGraph
from src.utilities.helpers import format_names


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph: RBGraph) -> str:
    """
    Species as circles, characters as boxes; black edges solid, red edges
    red, active characters double-bordered
    """
    lines: List[str] = ["graph redblack {"]
    for s in graph.species():
        lines.append(f"\t{_quote(graph.species_names[s])} [shape=circle];")
    for c in graph.characters():
        extra = ", peripheries=2" if graph.is_active(c) else ""
        lines.append(f"\t{_quote(graph.character_names[c])} [shape=box{extra}];")
    for s, c, color in graph.edges():
        style = " [color=red]" if color is EdgeColor.RED else ""
        lines.append(f"\t{_quote(graph.species_names[s])} -- {_quote(graph.character_names[c])}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_dot(diagram: HasseDiagram) -> str:
    """Nodes show state and species; sources are bold, sinks double-bordered"""
    sources, sinks = set(diagram.sources()), set(diagram.sinks())
    lines: List[str] = ["digraph hasse {", "\trankdir=BT;"]
    for u in range(len(diagram)):
        label = f"{diagram.state_name(u)}\\n{','.join(diagram.species_of_node(u))}"
        attrs = [f"label={_quote(label)}", "shape=box"]
        if u in sources:
            attrs.append("style=bold")
        if u in sinks:
            attrs.append("peripheries=2")
        lines.append(f"\th{u} [{', '.join(attrs)}];")
    for u, v in diagram.arcs():
        label = format_names(diagram.label(u, v), diagram.character_names)
        lines.append(f"\th{u} -> h{v} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: PersistentTree) -> str:
    """Edges carry their signed characters; species-labelled nodes are shaded"""
    if tree.is_empty:
        return ""
    lines: List[str] = ["digraph tree {"]
    for node in tree.nodes():
        species = tree.species_at(node)
        if species:
            name = SPECIES_SEPARATOR.join(species)
            lines.append(f"\tn{node} [label={_quote(name)}, style=filled, fillcolor=lightgrey];")
        else:
            lines.append(f"\tn{node} [label={_quote(ROOT_LABEL if node == tree.root else '')}];")
    for u, v in tree.edges():
        label = ",".join(item.label for item in tree.labels(u, v))
        lines.append(f"\tn{u} -> n{v} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
