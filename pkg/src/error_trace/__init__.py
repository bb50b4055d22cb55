"""Error handling and custom exceptions"""
from src.error_trace.exceptions import (
    PersistentPhylogenyError,
    ParseError,
    MatrixParseError,
    TraceParseError,
    MatrixValidationError,
    UnknownVertexError,
    RealizationError,
    PreconditionError,
    RealizationPreconditionError,
    InfeasibleRealizationError,
    InfeasibleReductionError,
    ChainOverflowError,
    ReductionAborted,
    ReductionDepthError,
    TreeBuildError,
    TreeParseError,
    ConfigurationError
)

__all__ = [
    "PersistentPhylogenyError",
    "ParseError",
    "MatrixParseError",
    "TraceParseError",
    "MatrixValidationError",
    "UnknownVertexError",
    "RealizationError",
    "PreconditionError",
    "RealizationPreconditionError",
    "InfeasibleRealizationError",
    "InfeasibleReductionError",
    "ChainOverflowError",
    "ReductionAborted",
    "ReductionDepthError",
    "TreeBuildError",
    "TreeParseError",
    "ConfigurationError"
]
