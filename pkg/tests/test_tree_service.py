"""
Tests for tree construction, validation and post-processing
"""
import pytest

from src.adapters.formats.newick import export_newick, parse_newick
from src.application.services.matrix_service import preprocess
from src.application.services.reduction_service import ReductionService
from src.application.services.tree_service import (
    build_tree,
    contract_tree,
    export_tree,
    lift_tree,
    positive_traversal,
    validate_tree,
)
from src.config.constants import OutputFormat
from src.config.settings import Settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.entities.red_black_graph import RBGraph
from src.domain.value_objects.signed_character import SignedCharacter
from src.error_trace.exceptions import ConfigurationError, TreeBuildError, TreeParseError


def solve_tree(matrix):
    trace = ReductionService(Settings()).reduce(RBGraph.from_matrix(matrix))
    return build_tree(matrix, trace)


@pytest.fixture
def sample_tree(sample_matrix):
    return solve_tree(sample_matrix)


class TestBuildTree:
    """Tests for build_tree"""

    def test_sample_tree_is_valid(self, sample_matrix, sample_tree):
        assert validate_tree(sample_tree, sample_matrix).valid

    def test_sample_labels(self, sample_tree):
        assert len(sample_tree.positive_labels()) == 7
        assert "c4+" not in sample_tree.positive_labels()
        assert "c4-" in sample_tree.negative_labels()

    def test_sample_root_has_one_child_per_component(self, sample_tree):
        assert len(sample_tree.children(sample_tree.root)) == 2

    def test_connected_instance_has_one_root_child(self, chain_matrix):
        tree = solve_tree(chain_matrix)
        assert len(tree.children(tree.root)) == 1

    def test_every_species_placed_once(self, sample_matrix, sample_tree):
        assert sorted(sample_tree.species_nodes()) == sorted(sample_matrix.species_names)

    def test_chain_tree_shape(self, chain_matrix):
        tree = solve_tree(chain_matrix)
        assert str(tree).splitlines()[1:] == [
            "0 -> 1 [c1+] s1",
            "1 -> 2 [c2+] s2",
            "2 -> 3 [c1-] s3",
        ]

    def test_infeasible_trace(self, chain_matrix):
        with pytest.raises(TreeBuildError) as info:
            build_tree(chain_matrix, [SignedCharacter.minus(0)])
        assert info.value.error_code == "INFEASIBLE_TRACE"

    def test_incomplete_trace(self, chain_matrix):
        with pytest.raises(TreeBuildError) as info:
            build_tree(chain_matrix, [SignedCharacter.plus(0)])
        assert info.value.error_code == "UNPLACED_SPECIES"

    def test_positive_traversal(self, sample_tree):
        assert positive_traversal(sample_tree).labels == ["c8+", "c2+", "c3+", "c5+", "c6+", "c1+", "c7+"]


class TestValidateTree:
    """Tests for validate_tree"""

    def test_wrong_root_state(self, chain_matrix):
        tree = PersistentTree([1, 0], chain_matrix.character_names)
        result = validate_tree(tree, chain_matrix)
        assert not result
        assert result.condition == 2

    def test_unlabelled_edge(self, chain_matrix):
        tree = PersistentTree([0, 0], chain_matrix.character_names)
        tree.add_child(tree.root, [], state=[1, 0])
        assert validate_tree(tree, chain_matrix).condition == 3

    def test_character_gained_twice(self, chain_matrix):
        tree = PersistentTree([0, 0], chain_matrix.character_names)
        tree.add_child(tree.root, [SignedCharacter.plus(0)])
        tree.add_child(tree.root, [SignedCharacter.plus(0)])
        result = validate_tree(tree, chain_matrix)
        assert result.condition == 4
        assert "c1" in result.message

    def test_missing_species(self, chain_matrix):
        tree = PersistentTree([0, 0], chain_matrix.character_names)
        node = tree.add_child(tree.root, [SignedCharacter.plus(0)])
        tree.add_species(node, "s1")
        result = validate_tree(tree, chain_matrix)
        assert result.condition == 5
        assert result.to_dict()["valid"] is False


class TestPostProcessing:
    """Tests for contraction, lifting and export"""

    def test_contract_keeps_validity(self, sample_matrix, sample_tree):
        contracted = contract_tree(sample_tree)
        assert validate_tree(contracted, sample_matrix).valid
        assert len(contracted) <= len(sample_tree)
        assert contracted.nodes() == list(range(len(contracted)))

    def test_contract_merges_unlabelled_path(self):
        tree = PersistentTree([0, 0], ("c1", "c2"))
        middle = tree.add_child(tree.root, [SignedCharacter.plus(0)])
        leaf = tree.add_child(middle, [SignedCharacter.plus(1)])
        tree.add_species(leaf, "s1")
        contracted = contract_tree(tree)
        assert len(contracted) == 2
        assert [item.label for item in contracted.labels(0, 1)] == ["c1+", "c2+"]
        assert contracted.state(1) == (1, 1)

    def test_lift_restores_dropped_vertices(self):
        original = BinaryMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])
        reduced, report = preprocess(original)
        tree = lift_tree(solve_tree(reduced), original, report)
        assert validate_tree(tree, original).valid
        assert "s3" in tree.species_at(tree.root)
        gains = [[item.label for item in tree.labels(u, v)] for u, v in tree.edges()]
        assert ["c1+", "c2+"] in gains
        assert all(state[3] == 0 for state in (tree.state(node) for node in tree.nodes()))

    def test_newick_export(self):
        tree = solve_tree(BinaryMatrix.from_rows([[1]]))
        assert export_tree(tree, OutputFormat.NEWICK) == "(s1[c1+])root;\n"

    def test_dot_export(self, sample_tree):
        assert export_tree(sample_tree, OutputFormat.DOT).startswith("digraph tree {")

    def test_trace_is_not_a_tree_format(self, sample_tree):
        with pytest.raises(ConfigurationError):
            export_tree(sample_tree, OutputFormat.TRACE)

    def test_newick_round_trip_validates(self, sample_matrix, sample_tree):
        parsed = parse_newick(export_newick(sample_tree), sample_matrix)
        assert validate_tree(parsed, sample_matrix).valid
        assert parsed.species_nodes().keys() == sample_tree.species_nodes().keys()

    def test_newick_rejects_unknown_species(self, chain_matrix):
        with pytest.raises(TreeParseError):
            parse_newick("(x9[c1+])root;", chain_matrix)

    @pytest.mark.parametrize("name", ["human:1", "o'brien", "homo sapiens", "a|b"])
    def test_newick_round_trip_quotes_names(self, name):
        matrix = BinaryMatrix.from_rows([[1, 0], [1, 1]], species_names=[name, "mouse"])
        tree = solve_tree(matrix)
        text = export_newick(tree)
        assert "'" in text
        parsed = parse_newick(text, matrix)
        assert validate_tree(parsed, matrix).valid
        assert set(parsed.species_nodes()) == {name, "mouse"}

    def test_newick_reads_quoted_and_spaced_text(self):
        matrix = BinaryMatrix.from_rows([[1, 0], [1, 1]], species_names=["human:1", "mouse"])
        parsed = parse_newick("( ( mouse [c2+] ) 'human:1' [c1+] ) root ;", matrix)
        assert validate_tree(parsed, matrix).valid

    def test_newick_rejects_unclosed_quote(self, chain_matrix):
        with pytest.raises(TreeParseError, match="unclosed quoted name"):
            parse_newick("('s1[c1+])root;", chain_matrix)
