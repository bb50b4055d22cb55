"""
Tests for maximal characters, Hasse diagrams, chains and safe sources
"""
from itertools import combinations

import pytest

from src.application.services.hasse_service import (
    build_diagram,
    chain_creduction,
    chain_limit,
    chains,
    is_degenerate,
    is_safe_chain,
    maximal_characters,
    maximal_reducible_graph,
    safe_sources,
)
from src.application.services.matrix_service import preprocess
from src.application.services.reduction_service import ReductionService
from src.config.settings import Settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.entities.red_black_graph import RBGraph
from src.error_trace.exceptions import ChainOverflowError
from src.evaluation.instance_generators import exhaustive_matrices, unique_matrices

C2, C3, C8 = 1, 2, 7


@pytest.fixture
def main_diagram(main_component):
    _, reducible = maximal_reducible_graph(main_component)
    return build_diagram(reducible)


class TestMaximalCharacters:
    """Tests for maximal character extraction"""

    def test_whole_graph(self, sample_graph):
        assert maximal_characters(sample_graph) == frozenset({C2, C3, C8})

    def test_main_component(self, main_component):
        assert maximal_characters(main_component) == frozenset({C2, C3})

    def test_active_characters_are_ignored(self, sample_graph):
        assert 3 not in maximal_characters(sample_graph)

    def test_reducible_graph_species(self, main_component):
        maximal, reducible = maximal_reducible_graph(main_component)
        assert reducible.characters() == [C2, C3]
        assert reducible.species() == [1, 2, 3, 4, 5]
        assert reducible == main_component.induced_subgraph([C2, C3])


class TestBuildDiagram:
    """Tests for the Hasse diagram"""

    def test_nodes_in_state_order(self, main_diagram):
        assert [node.state for node in main_diagram.nodes] == [
            frozenset({C2}),
            frozenset({C2, C3}),
            frozenset({C3}),
        ]
        assert main_diagram.nodes[1].species == (2, 4, 5)

    def test_arcs_sources_and_sinks(self, main_diagram):
        assert main_diagram.arcs() == [(0, 1), (2, 1)]
        assert main_diagram.sources() == [0, 2]
        assert main_diagram.sinks() == [1]
        assert main_diagram.label(0, 1) == frozenset({C3})
        assert main_diagram.is_acyclic()

    def test_covering_skips_transitive_arcs(self):
        graph = RBGraph.from_matrix(BinaryMatrix.from_rows([[1, 0, 0], [1, 1, 0], [1, 1, 1]]))
        diagram = build_diagram(graph)
        assert diagram.arcs() == [(0, 1), (1, 2)]

    def test_to_dict(self, main_diagram):
        data = main_diagram.to_dict()
        assert data["sources"] == ["{c2}", "{c3}"]
        assert data["sinks"] == ["{c2,c3}"]
        assert data["nodes"][1]["species"] == ["s3", "s5", "s6"]


class TestChains:
    """Tests for chain enumeration and safety"""

    def test_enumeration_order(self, main_diagram):
        assert [chain.nodes for chain in chains(main_diagram)] == [(0, 1), (2, 1)]

    def test_chain_creduction(self, main_diagram):
        first, second = chains(main_diagram)
        assert chain_creduction(main_diagram, first).labels == ["c2+", "c3+"]
        assert chain_creduction(main_diagram, second).labels == ["c3+", "c2+"]

    def test_chain_limit(self, main_diagram):
        assert chain_limit(main_diagram) == 5 * 2 * 2
        assert chain_limit(main_diagram, 3) == 60

    def test_overflow(self, main_diagram):
        with pytest.raises(ChainOverflowError):
            list(chains(main_diagram, limit=1))

    def test_both_chains_are_safe(self, main_component, main_diagram):
        _, reducible = maximal_reducible_graph(main_component)
        assert all(is_safe_chain(reducible, chain) for chain in chains(main_diagram))

    def test_crossing_chains_are_unsafe(self, cycle_matrix):
        graph = RBGraph.from_matrix(cycle_matrix)
        _, reducible = maximal_reducible_graph(graph)
        diagram = build_diagram(reducible)
        assert not any(is_safe_chain(reducible, chain) for chain in chains(diagram))


class TestSafeSources:
    """Tests for safe sources"""

    def test_two_safe_sources(self, main_component, main_diagram):
        sources = safe_sources(main_component, main_diagram)
        assert [node.state for node in sources] == [frozenset({C2}), frozenset({C3})]
        assert [node.species for node in sources] == [(3,), (1,)]

    def test_degenerate_diagram(self, cycle_matrix):
        graph = RBGraph.from_matrix(cycle_matrix)
        _, reducible = maximal_reducible_graph(graph)
        diagram = build_diagram(reducible)
        assert is_degenerate(diagram)
        assert len(list(chains(diagram))) == 4
        assert safe_sources(graph, diagram) == []

    def test_main_diagram_is_not_degenerate(self, main_diagram):
        assert not is_degenerate(main_diagram)

    def test_empty_diagram(self):
        graph = RBGraph.from_matrix(BinaryMatrix.from_rows([[0]]))
        diagram = build_diagram(graph)
        assert len(diagram) == 0
        assert safe_sources(graph, diagram) == []

    def test_species_source_failing_sigma_test_is_dropped(self):
        # after c6+, {c1,c5} is the state of s5 but crosses c6; {c4,c5} is kept alone
        rows = [[0, 0, 0, 0, 0, 1], [0, 0, 1, 1, 1, 0], [0, 1, 0, 1, 1, 1], [1, 0, 1, 1, 0, 1], [1, 0, 0, 0, 1, 0]]
        graph = RBGraph.from_matrix(BinaryMatrix.from_rows(rows)).realize_positive(5)
        _, reducible = maximal_reducible_graph(graph)
        diagram = build_diagram(reducible)
        assert is_degenerate(diagram)
        assert [node.state for node in diagram.nodes] == [
            frozenset({0, 3}),
            frozenset({0, 4}),
            frozenset({3, 4}),
        ]
        sources = safe_sources(graph, diagram)
        assert [node.state for node in sources] == [frozenset({3, 4})]
        assert sources[0].species == (1, 2)


def diagram_matrix(diagram):
    """Matrix of the maximal reducible graph, one row per species of the diagram"""
    characters = sorted(diagram.characters)
    rows = [[int(c in node.state) for c in characters] for node in diagram.nodes for _ in node.species]
    return BinaryMatrix.from_rows(rows)


def assert_source_levels(matrices):
    service = ReductionService(Settings())
    checked = 0
    for matrix in unique_matrices(matrices):
        reduced, _ = preprocess(matrix)
        outcome = service.reduce(RBGraph.from_matrix(reduced))
        if not outcome.is_success:
            continue
        # levels kept in a successful trace belong to reducible graphs
        for choice in outcome.choices:
            if choice.abandoned:
                continue
            checked += 1
            if is_degenerate(choice.diagram):
                resolved = diagram_matrix(choice.diagram)
                assert not any(
                    resolved.conflicting(a, b) for a, b in combinations(range(resolved.n_characters), 2)
                ), matrix.cells.tolist()
            else:
                assert len(choice.candidates) <= 2, matrix.cells.tolist()
    return checked


class TestDiagramInvariants:
    """Properties of the diagrams met at safe-source levels of solvable instances"""

    def test_exhaustive_3x3(self):
        assert assert_source_levels(exhaustive_matrices(3, 3)) > 0

    def test_exhaustive_3x3_with_active_character(self):
        assert_source_levels(exhaustive_matrices(3, 3, active=[0]))

    @pytest.mark.slow
    def test_exhaustive_4x4(self):
        assert assert_source_levels(exhaustive_matrices(4, 4)) > 0
