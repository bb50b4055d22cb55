"""
JSON summary models
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.config.constants import SUMMARY_SCHEMA_VERSION


class ChoiceSummary(BaseModel):
    """One safe-source attempt"""
    level: int
    path: List[str]
    candidates: List[str]
    chosen: str
    attempt: int
    abandoned: bool


class EventSummary(BaseModel):
    """Trace annotation"""
    kind: str
    position: int
    detail: str = ""


class OracleSummary(BaseModel):
    """Oracle verdict"""
    verdict: str
    unknown_count: int
    budget: int
    explored: int = 0
    witness: Optional[Dict[str, Any]] = None


class ValidationSummary(BaseModel):
    """Tree validation outcome"""
    valid: bool
    condition: Optional[int] = None
    message: str = ""


class Summary(BaseModel):
    """Versioned run summary"""
    schema_version: str = Field(SUMMARY_SCHEMA_VERSION, description="Summary schema version")
    command: str
    verdict: Optional[str] = None
    species: int = 0
    characters: int = 0
    active: List[str] = Field(default_factory=list)
    preprocessing: Optional[Dict[str, Any]] = None
    reduction: List[str] = Field(default_factory=list)
    events: List[EventSummary] = Field(default_factory=list)
    choices: List[ChoiceSummary] = Field(default_factory=list)
    abort: Optional[Dict[str, Any]] = None
    tree: Optional[str] = None
    validation: Optional[ValidationSummary] = None
    oracle: Optional[OracleSummary] = None
    cross_check: Optional[str] = None
    graph: Optional[Dict[str, Any]] = None
    hasse: Optional[Dict[str, Any]] = None
    timing: Optional[Dict[str, float]] = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"
