"""
Tests for the command-line surface
"""
import io
import json

import pytest
from pydantic import ValidationError

from src.adapters.cli import RunConfig, run
from src.application.services import solver_service
from src.application.services.oracle_service import OracleResult, extend
from src.config.constants import Command, OutputFormat, Verdict
from src.entry_scripts.run_cli import main
from tests.conftest import CYCLE_ROWS, SAMPLE_TEXT

CHAIN_TEXT = "s1 1 0\ns2 1 1\ns3 0 1\n"
CYCLE_TEXT = "".join(f"s{i + 1} " + " ".join(map(str, row)) + "\n" for i, row in enumerate(CYCLE_ROWS))


def invoke(text, **fields):
    """Run one command on matrix text from stdin; returns (code, stdout, stderr)"""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(RunConfig(**fields), io.StringIO(text), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestSolve:
    """Tests for the solve command"""

    def test_newick(self):
        code, out, err = invoke(CHAIN_TEXT, command="solve")
        assert code == 0
        assert out == "(((s3[c1-])s2[c2+])s1[c1+])root;\n"
        assert err == ""

    def test_trace(self):
        code, out, _ = invoke(SAMPLE_TEXT, command="solve", output_format="trace")
        assert code == 0
        steps = [line for line in out.splitlines() if not line.startswith("#")]
        assert steps == "c8+ c2+ c3+ c5+ c2- c4- c6+ c1+ c5- c1- c3- c7+".split()
        assert any(line.startswith("# ") for line in out.splitlines())

    def test_no_phylogeny(self):
        code, out, err = invoke(CYCLE_TEXT, command="solve")
        assert code == 1
        assert out == ""
        assert err.startswith("no persistent phylogeny:")

    def test_json_summary_with_cross_check(self):
        code, out, _ = invoke(CHAIN_TEXT, command="solve", output_format="json-summary", cross_check=True)
        assert code == 0
        data = json.loads(out)
        assert data["schema_version"] == "1.0"
        assert data["verdict"] == "solvable"
        assert data["cross_check"] == "agree"
        assert data["oracle"]["verdict"] == "solvable"
        assert data["reduction"] == ["c1+", "c2+", "c1-"]
        assert data["validation"]["valid"] is True
        assert "timing" not in data

    def test_cross_check_mismatch(self, monkeypatch):
        def disagreeing_oracle(matrix, budget=None):
            extended = extend(matrix)
            return OracleResult(Verdict.UNSOLVABLE, extended.unknown_count, budget or 0, extended)

        monkeypatch.setattr(solver_service, "solve_bruteforce", disagreeing_oracle)
        code, out, err = invoke(CHAIN_TEXT, command="solve", cross_check=True)
        assert code == 3
        assert out == "(((s3[c1-])s2[c2+])s1[c1+])root;\n"
        assert "cross-check mismatch: reduce=solvable oracle=unsolvable" in err

    @pytest.mark.parametrize("output_format", ["newick", "trace", "json-summary"])
    def test_repeated_runs_are_byte_identical(self, output_format):
        runs = [invoke(SAMPLE_TEXT, command="solve", output_format=output_format) for _ in range(3)]
        assert runs[0][0] == 0
        assert runs[1] == runs[0]
        assert runs[2] == runs[0]

    def test_json_summary_of_an_abort(self):
        code, out, _ = invoke(CYCLE_TEXT, command="solve", output_format="json-summary", cross_check=True)
        assert code == 1
        data = json.loads(out)
        assert data["verdict"] == "unsolvable"
        assert data["abort"]["path"] == ["level 0"]
        assert data["cross_check"] == "agree"

    def test_active_override(self):
        code, out, _ = invoke("c1 c2\ns1 0 1\ns2 1 1\n", command="solve", active=["c1"])
        assert code == 0
        assert "c1-" in out

    def test_bad_cell(self):
        code, out, err = invoke("s1 0 2\n", command="solve")
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_reads_a_file(self, tmp_path):
        path = tmp_path / "chain.txt"
        path.write_text(CHAIN_TEXT)
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(RunConfig(command="solve", input_path=str(path)), io.StringIO(""), stdout, stderr)
        assert code == 0
        assert stdout.getvalue().endswith("root;\n")

    def test_missing_file(self, tmp_path):
        code, _, err = invoke("", command="solve", input_path=str(tmp_path / "absent.txt"))
        assert code == 2
        assert err.startswith("error:")


class TestOracle:
    """Tests for the oracle command"""

    def test_unsolvable_text(self):
        code, out, err = invoke(CYCLE_TEXT, command="oracle")
        assert code == 1
        assert out == "verdict: unsolvable\nunknowns: 8\n"
        assert err.startswith("no persistent phylogeny")

    def test_over_budget(self):
        code, out, err = invoke(SAMPLE_TEXT, command="oracle", oracle_budget=10)
        assert code == 4
        assert out.startswith("verdict: over_budget")
        assert "26 unknowns > 10" in err

    def test_witness_tree(self):
        code, out, _ = invoke(CHAIN_TEXT, command="oracle", output_format="newick")
        assert code == 0
        assert out.endswith("root;\n")
        assert "c2-" in out


class TestVerify:
    """Tests for the verify command"""

    @pytest.mark.parametrize(
        "tree_text, code, message",
        [
            ("(s1[c1+])root;\n", 0, "valid\n"),
            ("(s1)root;\n", 1, "invalid: condition 3"),
        ],
    )
    def test_verify(self, tmp_path, tree_text, code, message):
        tree = tmp_path / "tree.nwk"
        tree.write_text(tree_text)
        result, out, _ = invoke("s1 1\n", command="verify", tree_path=str(tree))
        assert result == code
        assert out.startswith(message)

    def test_malformed_tree(self, tmp_path):
        tree = tmp_path / "tree.nwk"
        tree.write_text("(s1[c1+]root;")
        code, _, err = invoke("s1 1\n", command="verify", tree_path=str(tree))
        assert code == 2
        assert err.startswith("error:")


class TestInspect:
    """Tests for the inspection commands"""

    def test_graph_dot(self):
        code, out, _ = invoke(SAMPLE_TEXT, command="inspect-graph")
        assert code == 0
        assert out.startswith("graph redblack {")

    def test_hasse_json(self):
        code, out, _ = invoke(SAMPLE_TEXT, command="inspect-hasse", output_format="json-summary")
        assert code == 0
        data = json.loads(out)
        assert data["command"] == "inspect-hasse"
        assert data["hasse"]["sources"] == ["{c2}", "{c3}"]

    def test_missing_level(self):
        code, _, err = invoke(SAMPLE_TEXT, command="inspect-hasse", level=9)
        assert code == 2
        assert "level 9" in err


class TestRunConfig:
    """Tests for request validation"""

    def test_default_format(self):
        assert RunConfig(command="solve").output_format is OutputFormat.NEWICK
        assert RunConfig(command=Command.ORACLE).output_format is OutputFormat.TEXT

    def test_rejects_foreign_format(self):
        with pytest.raises(ValidationError, match="cannot emit"):
            RunConfig(command="inspect-graph", output_format="newick")

    def test_verify_needs_tree(self):
        with pytest.raises(ValidationError, match="--tree"):
            RunConfig(command="verify")

    def test_negative_budget(self):
        with pytest.raises(ValidationError):
            RunConfig(command="oracle", oracle_budget=-1)


class TestMain:
    """Tests for the argparse entry point"""

    def test_solve_file(self, tmp_path, capsys):
        path = tmp_path / "chain.txt"
        path.write_text(CHAIN_TEXT)
        assert main(["solve", str(path), "--format", "trace"]) == 0
        out = capsys.readouterr().out
        assert [line for line in out.splitlines() if not line.startswith("#")] == ["c1+", "c2+", "c1-"]

    def test_invalid_format_for_command(self, tmp_path, capsys):
        path = tmp_path / "chain.txt"
        path.write_text(CHAIN_TEXT)
        assert main(["inspect-graph", str(path), "--format", "trace"]) == 2
        assert "cannot emit" in capsys.readouterr().err

    def test_active_flag(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        path.write_text("c1 c2\ns1 0 1\ns2 1 1\n")
        assert main(["solve", str(path), "--active", "c1", "--format", "trace"]) == 0
        assert "c1-" in capsys.readouterr().out
