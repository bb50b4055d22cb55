"""
Hasse Service - maximal characters, diagram construction, chains and safety tests
"""
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from src.application.services.realization_service import iter_creduction
from src.config.constants import EdgeColor
from src.domain.entities.hasse_diagram import Chain, DiagramNode, HasseDiagram
from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.signed_character import CReduction
from src.error_trace.exceptions import ChainOverflowError, InfeasibleReductionError, PreconditionError
from src.utilities.helpers import format_names
from src.utilities.logger import get_logger

logger = get_logger(__name__)


def maximal_characters(graph: RBGraph) -> FrozenSet[int]:
    """
    Inactive characters whose species set is not strictly contained in the
    species set of another inactive character
    """
    inactive = graph.inactive_characters()
    masks = {c: graph.neighbour_mask(c) for c in inactive}
    maximal = set()
    for c in inactive:
        a = masks[c]
        if not any(a != masks[d] and a & ~masks[d] == 0 for d in inactive if d != c):
            maximal.add(c)
    return frozenset(maximal)


def maximal_reducible_graph(graph: RBGraph) -> Tuple[FrozenSet[int], RBGraph]:
    """The maximal characters of graph and the subgraph they induce"""
    maximal = maximal_characters(graph)
    return maximal, graph.induced_subgraph(sorted(maximal))


def build_diagram(reducible: RBGraph) -> HasseDiagram:
    """
    Hasse diagram of the species states of a maximal reducible graph

    Species with equal states share a node; arcs follow the covering relation.
    """
    groups: Dict[FrozenSet[int], List[int]] = {}
    for s in reducible.species():
        state = reducible.species_characters(s)
        groups.setdefault(state, []).append(s)

    nodes = sorted(
        (DiagramNode(state, tuple(species)) for state, species in groups.items()),
        key=lambda node: node.key,
    )
    states = [node.state for node in nodes]

    # u -> v when u is strictly inside v with no state strictly between them
    above: Dict[int, Set[int]] = {
        u: {v for v in range(len(states)) if states[u] < states[v]} for u in range(len(states))
    }
    arcs = []
    for u in range(len(states)):
        for v in sorted(above[u]):
            if not any(v in above[w] for w in above[u]):
                arcs.append((u, v))

    diagram = HasseDiagram(nodes, arcs, reducible.species_names, reducible.character_names)
    logger.debug(
        f"Hasse diagram: {len(nodes)} nodes, {len(arcs)} arcs, "
        f"sources={[diagram.state_name(u) for u in diagram.sources()]}"
    )
    return diagram


def chain_limit(diagram: HasseDiagram, factor: int = 1) -> int:
    """Polynomial cap n*m^2 on enumerated chains"""
    n = max(diagram.species_count, 1)
    m = max(len(diagram.characters), 1)
    return factor * n * m * m


def chains(diagram: HasseDiagram, limit: Optional[int] = None) -> Iterator[Chain]:
    """
    Lazily enumerate source-to-sink paths in lexicographic node order

    Raises:
        ChainOverflowError: more than `limit` chains (default n*m^2)
    """
    cap = chain_limit(diagram) if limit is None else limit
    count = 0
    for source in diagram.sources():
        stack: List[Tuple[int, ...]] = [(source,)]
        while stack:
            path = stack.pop()
            successors = diagram.successors(path[-1])
            if not successors:
                count += 1
                if count > cap:
                    raise ChainOverflowError(
                        f"chain enumeration exceeded the cap of {cap} paths",
                        error_code="CHAIN_OVERFLOW",
                        details={"cap": cap},
                    )
                yield Chain(path, diagram)
                continue
            # reversed so the smallest successor is explored first
            for v in reversed(successors):
                stack.append(path + (v,))


def chain_creduction(diagram: HasseDiagram, chain: Chain) -> CReduction:
    """Source state characters ascending, then every arc label ascending"""
    if chain.diagram is not None and chain.diagram is not diagram:
        raise PreconditionError("chain belongs to another diagram")
    order = sorted(diagram.nodes[chain.source].state)
    for u, v in zip(chain.nodes, chain.nodes[1:]):
        order.extend(sorted(diagram.label(u, v)))
    return CReduction.positives(order, diagram.character_names)


def _realizes_without_sigma(graph: RBGraph, reduction: CReduction) -> bool:
    """True when the reduction is feasible on graph and never creates a red sigma"""
    try:
        for step in iter_creduction(graph, reduction):
            # a red sigma cannot disappear later, so the first one decides
            if step.graph.has_red_sigma():
                return False
    except InfeasibleReductionError:
        return False
    return True


def is_safe_chain(reducible: RBGraph, chain: Chain) -> bool:
    """True iff the chain's c-reduction is feasible on the reducible graph and leaves no red sigma"""
    diagram = chain.diagram
    if diagram is None:
        raise PreconditionError("chain carries no diagram")
    return _realizes_without_sigma(reducible, chain_creduction(diagram, chain))


def is_degenerate(diagram: HasseDiagram) -> bool:
    """True iff the diagram has no arcs, i.e. every chain is trivial"""
    return not diagram.has_arcs


def safe_sources(graph: RBGraph, diagram: HasseDiagram, limit: Optional[int] = None) -> List[DiagramNode]:
    """
    Safe sources of the diagram for graph, in lexicographic state order

    A source qualifies when one of its chains is safe and realizing its
    characters in graph leaves no red sigma. In a degenerate diagram, when
    some qualifying source equals the inactive character set of a species of
    graph, only such sources are kept; sources that fail the sigma test never
    shadow the others.
    """
    if not len(diagram):
        return []
    reducible = graph.induced_subgraph(sorted(diagram.characters))

    with_safe_chain: List[int] = []
    for chain in chains(diagram, limit):
        if chain.source in with_safe_chain:
            continue
        if is_safe_chain(reducible, chain):
            with_safe_chain.append(chain.source)

    inactive = set(graph.inactive_characters())
    candidates = []
    for u in sorted(with_safe_chain, key=lambda i: diagram.nodes[i].key):
        node = diagram.nodes[u]
        reduction = CReduction.positives([c for c in node.key if c in inactive], graph.character_names)
        if _realizes_without_sigma(graph, reduction):
            candidates.append(node)

    if is_degenerate(diagram):
        species_states = {graph.species_characters(s, EdgeColor.BLACK) for s in graph.species()}
        if any(node.state in species_states for node in candidates):
            candidates = [node for node in candidates if node.state in species_states]

    logger.debug(f"Safe sources: {[format_names(n.state, diagram.character_names) for n in candidates]}")
    return candidates
