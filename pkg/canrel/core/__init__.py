"""
CANREL Configuration Module
Handles all engine configuration via environment variables.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="CANREL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="canrel")
    app_version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)
    log_level: str = Field(default="WARNING")

    # Enumeration bounds
    max_arrows: int = Field(default=8, ge=0)
    max_squares: int = Field(default=8, ge=0)
    enumerate_hard_limit_arrows: int = Field(default=8, ge=0)
    enumerate_hard_limit_squares: int = Field(default=12, ge=0)
    workers: int = Field(default=1, ge=1)

    # Simplicial checks
    default_depth: int = Field(default=2, ge=0)

    # Linear suites
    random_seed: int = Field(default=0)
    max_ambient_dim: int = Field(default=8, ge=0)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Convenience instance
settings = get_settings()
