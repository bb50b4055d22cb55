"""
Pytest Configuration and Fixtures
"""
import os

import pytest

from src.application.services.matrix_service import parse_matrix
from src.config.settings import get_settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.entities.red_black_graph import RBGraph

SAMPLE_TEXT = """\
#active: c4
c1 c2 c3 c4 c5 c6 c7 c8
s1 0 0 0 1 0 0 0 1
s2 0 0 1 1 1 1 0 0
s3 0 1 1 0 0 0 0 0
s4 1 1 0 0 0 0 0 0
s5 1 1 1 0 1 0 1 0
s6 0 1 1 1 1 0 0 0
"""

SAMPLE_TRACE = "c8+ c2+ c3+ c5+ c2- c4- c6+ c1+ c5- c1- c3- c7+".split()

CYCLE_ROWS = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]


@pytest.fixture(scope="session", autouse=True)
def setup_test_env():
    """Setup test environment variables"""
    os.environ["PPHYLO_LOG_LEVEL"] = "WARNING"
    os.environ["PPHYLO_ORACLE_BUDGET"] = "20"
    os.environ["PPHYLO_MAX_BACKTRACKS"] = "16"
    os.environ.pop("PPHYLO_INCLUDE_TIMING", None)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def sample_text():
    """Six species, eight characters, c4 active"""
    return SAMPLE_TEXT


@pytest.fixture
def sample_matrix():
    return parse_matrix(SAMPLE_TEXT)


@pytest.fixture
def sample_graph(sample_matrix):
    """Red-black graph of the six-species matrix"""
    return RBGraph.from_matrix(sample_matrix)


@pytest.fixture
def main_component(sample_graph):
    """The component of s2..s6; the other one is {s1, c8}"""
    return sample_graph.connected_components()[1]


@pytest.fixture
def cycle_matrix():
    """Four species on a cycle of pairwise overlapping characters; no persistent phylogeny"""
    return BinaryMatrix.from_rows(CYCLE_ROWS)


@pytest.fixture
def chain_matrix():
    """s1={c1}, s2={c1,c2}, s3={c2}: solvable only by losing c1"""
    return BinaryMatrix.from_rows([[1, 0], [1, 1], [0, 1]])
