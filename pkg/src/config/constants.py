"""
Solver Constants
"""
from enum import Enum, IntEnum


class Sign(str, Enum):
    """Sign of a realized character"""
    PLUS = "+"
    MINUS = "-"


class EdgeColor(str, Enum):
    """Red-black graph edge colors"""
    BLACK = "black"    # inactive character, species has it
    RED = "red"        # active character, species lacks it


class VertexKind(str, Enum):
    """Red-black graph vertex kinds"""
    SPECIES = "s"
    CHARACTER = "c"


class Verdict(str, Enum):
    """Decision outcomes"""
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"
    OVER_BUDGET = "over_budget"


class EventKind(str, Enum):
    """Reduction trace annotations"""
    SINGLETON_REMOVAL = "singleton-removal"
    FREE_NEGATIVE = "free-negative"
    UNIVERSAL_POSITIVE = "universal-positive"
    COMPONENT_SPLIT = "component-split"
    SOURCE_REALIZATION = "source-realization"
    BACKTRACK = "backtrack"


class Command(str, Enum):
    """CLI commands"""
    SOLVE = "solve"
    INSPECT_GRAPH = "inspect-graph"
    INSPECT_HASSE = "inspect-hasse"
    ORACLE = "oracle"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    """CLI output formats"""
    NEWICK = "newick"
    DOT = "dot"
    TRACE = "trace"
    JSON_SUMMARY = "json-summary"
    TEXT = "text"


class ExitCode(IntEnum):
    """Process exit codes, one per outcome"""
    SUCCESS = 0
    NO_PHYLOGENY = 1
    INPUT_ERROR = 2
    CROSS_CHECK_MISMATCH = 3
    OVER_BUDGET = 4
    INTERNAL_ERROR = 5


# Input format
ACTIVE_DIRECTIVE = "#active:"
COMMENT_PREFIX = "#"
AUTO_SPECIES_PREFIX = "s"
AUTO_CHARACTER_PREFIX = "c"

# Output
ROOT_LABEL = "root"
SPECIES_SEPARATOR = "|"
SUMMARY_SCHEMA_VERSION = "1.0"
NO_PHYLOGENY_MESSAGE = "no persistent phylogeny"

# Formats accepted per command; the first one is the default
COMMAND_FORMATS = {
    Command.SOLVE: (OutputFormat.NEWICK, OutputFormat.DOT, OutputFormat.TRACE, OutputFormat.JSON_SUMMARY),
    Command.INSPECT_GRAPH: (OutputFormat.DOT, OutputFormat.JSON_SUMMARY),
    Command.INSPECT_HASSE: (OutputFormat.DOT, OutputFormat.JSON_SUMMARY),
    Command.ORACLE: (OutputFormat.TEXT, OutputFormat.JSON_SUMMARY, OutputFormat.NEWICK, OutputFormat.DOT),
    Command.VERIFY: (OutputFormat.TEXT, OutputFormat.JSON_SUMMARY),
}
