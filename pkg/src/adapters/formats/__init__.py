"""Output formats - DOT, Newick, trace text and JSON summaries"""
from src.adapters.formats.dot_writer import graph_to_dot, hasse_to_dot, tree_to_dot
from src.adapters.formats.newick import export_newick, parse_newick
from src.adapters.formats.summary import Summary
from src.adapters.formats.trace_codec import parse_trace, serialize_trace

__all__ = [
    "graph_to_dot",
    "hasse_to_dot",
    "tree_to_dot",
    "export_newick",
    "parse_newick",
    "Summary",
    "parse_trace",
    "serialize_trace",
]
