# src/config/settings.py
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from functools import lru_cache


class Settings(BaseSettings):
    """Solver settings loaded from environment variables (prefix PPHYLO_)"""

    model_config = SettingsConfigDict(
        env_prefix="PPHYLO_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Oracle
    oracle_budget: int = Field(default=20, ge=0)

    # Reduction
    chain_limit_factor: int = Field(default=1, ge=1)
    max_backtracks: int = Field(default=16, ge=0)
    validate_trees: bool = Field(default=True)

    # Input
    strict_names: bool = Field(default=False)

    # Output
    include_timing: bool = Field(default=False)

    # Logging
    log_level: str = Field(default="WARNING")
    log_file: Optional[str] = Field(default=None)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
