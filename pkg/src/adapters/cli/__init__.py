"""Command-line adapter"""
from src.adapters.cli.run_config import RunConfig
from src.adapters.cli.runner import CommandRunner, run

__all__ = ["RunConfig", "CommandRunner", "run"]
