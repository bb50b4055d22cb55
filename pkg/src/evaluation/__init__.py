"""
Evaluation package - instance families and the reduce/oracle agreement harness
"""
from src.evaluation.agreement_harness import (
    AgreementHarness,
    AgreementRecord,
    disagreements,
    summarize
)
from src.evaluation.instance_generators import (
    canonical_key,
    exhaustive_matrices,
    random_laminar_matrices,
    random_matrices,
    unique_matrices
)

__all__ = [
    "AgreementHarness",
    "AgreementRecord",
    "disagreements",
    "summarize",
    "canonical_key",
    "exhaustive_matrices",
    "random_laminar_matrices",
    "random_matrices",
    "unique_matrices"
]
