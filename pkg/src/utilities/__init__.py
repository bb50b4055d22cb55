"""Utility functions and helpers"""
from src.utilities.logger import get_logger, setup_logging
from src.utilities.helpers import (
    mask_of,
    bits_of,
    nested_or_disjoint,
    gray_code_subsets,
    is_binary_token,
    format_names
)

__all__ = [
    "get_logger",
    "setup_logging",
    "mask_of",
    "bits_of",
    "nested_or_disjoint",
    "gray_code_subsets",
    "is_binary_token",
    "format_names"
]
