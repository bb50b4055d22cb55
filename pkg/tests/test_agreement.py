"""
Tests for the instance generators and the reduce/oracle agreement harness
"""
import numpy as np
import pytest

from src.config.settings import Settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.evaluation import (
    AgreementHarness,
    canonical_key,
    disagreements,
    exhaustive_matrices,
    random_laminar_matrices,
    random_matrices,
    summarize,
    unique_matrices,
)
from src.evaluation.agreement_harness import describe


@pytest.fixture
def harness():
    return AgreementHarness(oracle_budget=20)


def assert_clean(df):
    """Every verdict pair agrees and every structural check holds"""
    assert disagreements(df).empty, disagreements(df)[["instance", "active", "reduce_verdict", "oracle_verdict"]]
    assert not (df["tree_valid"] == False).any()  # noqa: E712
    assert df["sigma_violations"].sum() == 0
    assert df["root_check"].all()


class TestGenerators:
    """Tests for the instance families"""

    def test_exhaustive_count(self):
        matrices = list(exhaustive_matrices(2, 2))
        assert len(matrices) == 16
        assert matrices[0].cells.tolist() == [[0, 0], [0, 0]]
        assert matrices[-1].cells.tolist() == [[1, 1], [1, 1]]

    def test_exhaustive_active(self):
        matrix = next(exhaustive_matrices(2, 2, active=[1]))
        assert matrix.active == frozenset({1})

    def test_canonical_key_ignores_order(self):
        a = BinaryMatrix.from_rows([[1, 0], [1, 1]])
        b = BinaryMatrix.from_rows([[1, 1], [0, 1]])
        assert canonical_key(a) == canonical_key(b)

    def test_canonical_key_keeps_activity(self):
        a = BinaryMatrix.from_rows([[1, 0], [1, 1]])
        b = BinaryMatrix.from_rows([[1, 0], [1, 1]], active=["c2"])
        assert canonical_key(a) != canonical_key(b)

    def test_unique_matrices_shrinks_the_family(self):
        unique = list(unique_matrices(exhaustive_matrices(2, 2)))
        assert 1 < len(unique) < 16

    def test_random_matrices_are_seeded(self):
        first = [m.cells.tolist() for m in random_matrices(5, 4, 4, seed=7)]
        second = [m.cells.tolist() for m in random_matrices(5, 4, 4, seed=7)]
        assert first == second

    def test_random_active_sizes(self):
        matrices = list(random_matrices(3, 4, 5, seed=1, active_sizes=(0, 2)))
        assert [len(m.active) for m in matrices] == [0, 0, 0, 2, 2, 2]

    def test_laminar_columns(self):
        for matrix in random_laminar_matrices(20, 6, 5, seed=3):
            masks = [frozenset(np.flatnonzero(matrix.cells[:, c]).tolist()) for c in range(matrix.n_characters)]
            for a in masks:
                for b in masks:
                    assert a <= b or b <= a or not (a & b)

    def test_describe(self, cycle_matrix):
        assert describe(cycle_matrix) == "1100/0110/0011/1001"


class TestHarness:
    """Tests for single checks and summaries"""

    def test_check_sample_is_over_budget(self, harness, sample_matrix):
        record = harness.check(sample_matrix, "sample")
        assert record.reduce_verdict == "solvable"
        assert record.oracle_verdict == "over_budget"
        assert record.agree is None
        assert record.negatives == 5
        assert record.tree_valid is True
        assert not record.connected
        assert record.root_children == 2
        assert record.root_check

    def test_check_cycle(self, harness, cycle_matrix):
        record = harness.check(cycle_matrix)
        assert record.reduce_verdict == "unsolvable"
        assert record.oracle_verdict == "unsolvable"
        assert record.agree is True
        assert "no safe source" in record.abort_reason

    def test_run_and_summarize(self, harness, cycle_matrix, chain_matrix):
        df = harness.run([cycle_matrix, chain_matrix], "small")
        assert len(df) == 2
        assert "root_check" in df.columns
        summary = summarize(df)
        assert summary.loc["small", "instances"] == 2
        assert summary.loc["small", "solvable"] == 1
        assert summary.loc["small", "disagreements"] == 0

    def test_summarize_empty(self, harness):
        assert summarize(harness.run([], "none")).empty


class TestAgreement:
    """Reduce and the oracle agree on whole families"""

    def test_exhaustive_3x3(self, harness):
        df = harness.run(unique_matrices(exhaustive_matrices(3, 3)), "exhaustive-3x3")
        assert_clean(df)

    def test_exhaustive_3x3_one_active(self, harness):
        df = harness.run(unique_matrices(exhaustive_matrices(3, 3, active=[0])), "exhaustive-3x3-a1")
        assert_clean(df)

    @pytest.mark.slow
    def test_exhaustive_4x4(self, harness):
        df = harness.run(unique_matrices(exhaustive_matrices(4, 4)), "exhaustive-4x4")
        assert_clean(df)

    @pytest.mark.slow
    def test_random_5x6(self, harness):
        df = harness.run(random_matrices(250, 5, 6, seed=11, active_sizes=(0, 1)), "random-5x6")
        assert len(df) == 500
        assert_clean(df)

    def test_laminar_needs_no_loss(self, harness):
        df = harness.run(random_laminar_matrices(30, 8, 8, seed=5), "laminar-8x8")
        assert (df["reduce_verdict"] == "solvable").all()
        assert (df["negatives"] == 0).all()
        assert_clean(df)

    @pytest.mark.slow
    def test_laminar_200(self, harness):
        df = harness.run(random_laminar_matrices(200, 6, 6, seed=13), "laminar-6x6")
        assert len(df) == 200
        assert (df["reduce_verdict"] == "solvable").all()
        assert_clean(df)


def rows_of(text, active=()):
    return BinaryMatrix.from_rows([[int(v) for v in row] for row in text.split("/")], active=active)


class TestSingleChoiceAgreement:
    """Solvable instances reduce without backtracking and the oracle confirms them"""

    @pytest.fixture
    def single_choice(self):
        return AgreementHarness(Settings(max_backtracks=0), oracle_budget=20)

    @pytest.mark.parametrize(
        "text, active",
        [
            ("010110/000011/010101/011101/101101", ()),
            ("010110/000011/010101/011101/101101", ("c3",)),
            ("000001/001110/010111/101101/100010", ()),
        ],
    )
    def test_solvable_without_backtracking(self, single_choice, text, active):
        record = single_choice.check(rows_of(text, active))
        assert record.reduce_verdict == "solvable"
        assert record.oracle_verdict == "solvable"
        assert record.agree is True
        assert record.tree_valid is True

    @pytest.mark.slow
    def test_sample_within_a_larger_budget(self, sample_matrix):
        record = AgreementHarness(oracle_budget=26).check(sample_matrix, "sample")
        assert record.oracle_verdict == "solvable"
        assert record.agree is True
