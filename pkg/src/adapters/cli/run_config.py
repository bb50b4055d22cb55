"""
Run configuration of one CLI invocation
"""
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from src.config.constants import COMMAND_FORMATS, Command, OutputFormat


class RunConfig(BaseModel):
    """Validated CLI request"""
    command: Command
    input_path: Optional[str] = Field(None, description="Matrix file; stdin when absent or '-'")
    output_format: Optional[OutputFormat] = Field(None, description="Defaults to the command's first format")
    active: Optional[List[str]] = Field(None, description="Active characters overriding the file directive")
    oracle_budget: Optional[int] = Field(None, ge=0)
    cross_check: bool = False
    strict_names: Optional[bool] = None
    seed: Optional[int] = Field(None, description="Accepted and unused")
    contract: bool = False
    level: int = Field(0, ge=0)
    tree_path: Optional[str] = Field(None, description="Newick tree read by verify")

    @model_validator(mode="after")
    def check_command(self) -> "RunConfig":
        """Fill the default format and reject formats the command cannot emit"""
        allowed = COMMAND_FORMATS[self.command]
        if self.output_format is None:
            self.output_format = allowed[0]
        elif self.output_format not in allowed:
            raise ValueError(
                f"{self.command.value} cannot emit {self.output_format.value}; "
                f"choose one of {', '.join(f.value for f in allowed)}"
            )
        if self.command is Command.VERIFY and not self.tree_path:
            raise ValueError("verify needs --tree")
        return self

    @property
    def reads_stdin(self) -> bool:
        return self.input_path in (None, "-")
