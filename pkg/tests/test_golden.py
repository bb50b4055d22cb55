"""
Byte-stable outputs compared against tests/golden
"""
import io
from pathlib import Path

import pytest

from src.adapters.cli import RunConfig, run
from src.adapters.formats.trace_codec import parse_trace, serialize_trace
from src.application.services.reduction_service import ReductionService
from src.config.constants import EventKind
from src.config.settings import Settings
from src.domain.entities.red_black_graph import RBGraph
from src.error_trace.exceptions import MatrixParseError, ParseError, TraceParseError
from tests.conftest import SAMPLE_TEXT

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def reduce_matrix(matrix):
    return ReductionService(Settings()).reduce(RBGraph.from_matrix(matrix))


class TestGoldenTraces:
    """Trace text of the reference instances"""

    @pytest.mark.parametrize("fixture, name", [("sample_matrix", "sample.trace"), ("chain_matrix", "chain.trace")])
    def test_serialize(self, request, fixture, name):
        matrix = request.getfixturevalue(fixture)
        assert serialize_trace(reduce_matrix(matrix)) == golden(name)

    def test_parse_restores_events(self, sample_matrix):
        parsed = parse_trace(golden("sample.trace"), sample_matrix.character_names)
        original = reduce_matrix(sample_matrix)
        assert parsed.labels == original.labels
        assert parsed.events == original.events

    def test_parse_ignores_plain_comments(self, chain_matrix):
        parsed = parse_trace("# just a note\nc1+\n", chain_matrix.character_names)
        assert parsed.labels == ["c1+"]
        assert parsed.events == ()

    def test_free_negative_event(self, chain_matrix):
        parsed = parse_trace(golden("chain.trace"), chain_matrix.character_names)
        assert parsed.events[-1].kind is EventKind.FREE_NEGATIVE
        assert parsed.events[-1].position == 2

    def test_parse_error_names_the_trace(self, chain_matrix):
        with pytest.raises(TraceParseError) as info:
            parse_trace("c1+\nc9+\n", chain_matrix.character_names)
        assert info.value.error_code == "TRACE_PARSE_ERROR"
        assert info.value.line == 2
        assert info.value.message.startswith("trace line 2")
        assert isinstance(info.value, ParseError)
        assert not isinstance(info.value, MatrixParseError)


class TestGoldenTrees:
    """Newick text of the reference instances"""

    def test_sample_newick(self):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(RunConfig(command="solve"), io.StringIO(SAMPLE_TEXT), stdout, stderr)
        assert code == 0
        assert stdout.getvalue() == golden("sample.newick")
