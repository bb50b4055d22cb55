"""
Custom Exception Classes
"""
from typing import Optional, Dict, Any


class PersistentPhylogenyError(Exception):
    """Base exception for the persistent phylogeny solver"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary"""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details
        }


class ParseError(PersistentPhylogenyError):
    """Exception raised when an input document cannot be parsed"""

    document = "input"
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = ""
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column is not None else "")
        prefix = f"{self.document} {location}" if location else self.document
        super().__init__(
            message=f"{prefix}: {message}",
            error_code=self.code,
            details={"document": self.document, "line": line, "column": column}
        )
        self.line = line
        self.column = column


class MatrixParseError(ParseError):
    """Exception raised when matrix text cannot be parsed"""

    document = "matrix"
    code = "MATRIX_PARSE_ERROR"


class TraceParseError(ParseError):
    """Exception raised when a serialized trace cannot be parsed"""

    document = "trace"
    code = "TRACE_PARSE_ERROR"


class MatrixValidationError(PersistentPhylogenyError):
    """Exception raised when a matrix violates its invariants"""
    pass


class UnknownVertexError(PersistentPhylogenyError, LookupError):
    """Exception raised when a species or character is not present"""

    def __init__(self, kind: str, key: Any):
        super().__init__(
            message=f"unknown {kind}: {key}",
            error_code="UNKNOWN_VERTEX",
            details={"kind": kind, "key": str(key)}
        )


class RealizationError(PersistentPhylogenyError):
    """Base class for realization failures"""
    pass


class PreconditionError(PersistentPhylogenyError):
    """Exception raised when an operation is called outside its precondition"""
    pass


class RealizationPreconditionError(RealizationError, PreconditionError):
    """Exception raised when a character has the wrong activity for a realization"""
    pass


class InfeasibleRealizationError(RealizationError):
    """Exception raised when a negative realization targets a character that is not free"""
    pass


class InfeasibleReductionError(RealizationError):
    """Exception raised when a c-reduction cannot be applied"""

    def __init__(self, message: str, position: int, cause: Optional[Exception] = None):
        super().__init__(
            message=message,
            error_code="INFEASIBLE_REDUCTION",
            details={"position": position, "cause": str(cause) if cause else None}
        )
        self.position = position


class ChainOverflowError(PersistentPhylogenyError):
    """Exception raised when chain enumeration exceeds its polynomial cap"""
    pass


class ReductionAborted(PersistentPhylogenyError):
    """Raised inside the recursion when a level has no safe source"""

    def __init__(self, message: str, path: tuple, diagram: Any = None):
        super().__init__(message=message, error_code="ABORT", details={"path": list(path)})
        self.path = path
        self.diagram = diagram


class ReductionDepthError(PersistentPhylogenyError):
    """Exception raised when the recursion exceeds its depth bound (a bug)"""
    pass


class TreeBuildError(PersistentPhylogenyError):
    """Exception raised when a trace cannot be turned into a valid tree"""
    pass


class TreeParseError(PersistentPhylogenyError):
    """Exception raised when a Newick tree cannot be read"""
    pass


class ConfigurationError(PersistentPhylogenyError):
    """Exception raised when configuration is invalid"""
    pass
