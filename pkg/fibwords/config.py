"""Library and CLI configuration using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings with validation and type safety.

    Uses pydantic-settings for automatic environment variable loading
    (prefix ``FIBWORDS_``) with proper type conversion and validation.
    """

    model_config = SettingsConfigDict(
        env_prefix="FIBWORDS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # Ignore extra environment variables
    )

    # Word Settings
    max_word_length: int = Field(
        default=10_000_000,
        ge=1,
        description="Global cap on the number of symbols of any materialized word",
    )
    word_cache_size: int = Field(
        default=64,
        ge=0,
        description="Number of materialized f-words kept in the LRU cache",
    )

    # Verification Settings
    default_length_cap: int = Field(
        default=1_000_000,
        ge=1,
        description="Largest L(n) visited by a grid sweep when no cap is given",
    )
    balance_factor_length: int = Field(
        default=64,
        ge=1,
        description="Longest factor length inspected by the balance check",
    )
    grid_a_min: int = Field(default=1, ge=1, description="Default grid lower a")
    grid_a_max: int = Field(default=6, ge=1, description="Default grid upper a")
    grid_b_min: int = Field(default=1, ge=1, description="Default grid lower b")
    grid_b_max: int = Field(default=6, ge=1, description="Default grid upper b")

    # Worker Settings
    worker_concurrency: int = Field(
        default=1,
        ge=1,
        le=32,
        description="Number of worker processes used by grid verification",
    )

    # Logging Settings
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING", description="Logging level"
    )
    log_format: Literal["plain", "structured"] = Field(
        default="plain", description="Plain text or key=value structured logs"
    )

    @field_validator("default_length_cap")
    @classmethod
    def validate_length_cap_within_global_cap(cls, v: int, info) -> int:
        """Ensure the grid cap never exceeds the global word cap."""
        max_word_length = info.data.get("max_word_length", 10_000_000)
        if v > max_word_length:
            raise ValueError(
                f"default_length_cap ({v}) must not exceed "
                f"max_word_length ({max_word_length})"
            )
        return v

    @field_validator("grid_a_max", "grid_b_max")
    @classmethod
    def validate_grid_bounds(cls, v: int, info) -> int:
        """Ensure each default grid range is nonempty."""
        lower_key = "grid_a_min" if info.field_name == "grid_a_max" else "grid_b_min"
        lower = info.data.get(lower_key, 1)
        if v < lower:
            raise ValueError(f"{info.field_name} ({v}) is below {lower_key} ({lower})")
        return v

    @property
    def grid_a_range(self) -> range:
        """Default inclusive a-range of the verification grid."""
        return range(self.grid_a_min, self.grid_a_max + 1)

    @property
    def grid_b_range(self) -> range:
        """Default inclusive b-range of the verification grid."""
        return range(self.grid_b_min, self.grid_b_max + 1)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance.

    Using lru_cache ensures we only create one Settings instance
    and reuse it for the lifetime of the process.
    """
    return Settings()
