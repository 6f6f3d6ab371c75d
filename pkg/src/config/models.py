"""
Configuration data models for the Serre weight toolkit.

This module defines Pydantic models for all configuration sections,
providing validation, type safety, and documentation for settings.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    """Available logging levels."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LogFormat(str, Enum):
    """Log line layouts."""
    STANDARD = "standard"
    DETAILED = "detailed"


class CSign(str, Enum):
    """Which difference of the type exponents the c-digits expand."""
    GAMMA_MINUS_GAMMA_PRIME = "gamma_minus_gamma_prime"
    GAMMA_PRIME_MINUS_GAMMA = "gamma_prime_minus_gamma"


class TableVariant(str, Enum):
    """
    Rule set turning (c, epsilon') into r for the weights of a type.

    PRINTED: r = c, c-1, p-2-c, p-1-c depending on (eps'_i, eps'_{i-1}).
    RECONCILED: the table rebuilt from c - r = eps'_i (p-2-2r) - eps'_{i-1},
    i.e. r = c, c+1, p-2-c, p-3-c.
    """
    PRINTED = "printed"
    RECONCILED = "reconciled"


class CalibrationConfig(BaseModel):
    """Sign and table conventions for the weights of a tame type."""
    c_sign: CSign = Field(
        default=CSign.GAMMA_MINUS_GAMMA_PRIME,
        description="Difference expanded by the c-digits",
    )
    table_variant: TableVariant = Field(
        default=TableVariant.PRINTED,
        description="Rule set mapping (c, epsilon') to r",
    )
    cross_check_closed_form: bool = Field(
        default=True,
        description="Re-derive s through the closed form and compare",
    )


class SamplerConfig(BaseModel):
    """Las Vegas sampler configuration."""
    max_retries: int = Field(default=64, ge=1, description="Draws before giving up")
    seed: Optional[int] = Field(default=None, description="Default seed when none is given")


class EnumerationConfig(BaseModel):
    """Weight enumeration and batch processing configuration."""
    check_invariants: bool = Field(
        default=False,
        description="Assert table disjointness and counting inequalities at every step",
    )
    batch_concurrency: int = Field(default=8, ge=1, le=256, description="Concurrent batch records")


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: LogLevel = Field(default=LogLevel.WARNING, description="Logging level")
    format: LogFormat = Field(default=LogFormat.STANDARD, description="Log format (standard/detailed)")


class SerreConfig(BaseSettings):
    """Main configuration model for the toolkit."""

    calibration: CalibrationConfig = Field(default_factory=CalibrationConfig, description="Convention calibration")
    sampler: SamplerConfig = Field(default_factory=SamplerConfig, description="Sampler settings")
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig, description="Enumeration settings")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Logging configuration")

    environment: str = Field(default="development", description="Environment name")

    model_config = SettingsConfigDict(
        env_prefix="SERRE_",
        env_nested_delimiter="__",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        allowed_envs = ["development", "testing", "production"]
        if v not in allowed_envs:
            raise ValueError(f"Environment must be one of: {allowed_envs}")
        return v


# Environment variable mapping for quick access
ENV_VAR_MAPPING = {
    "SERRE_CALIBRATION__C_SIGN": "calibration.c_sign",
    "SERRE_CALIBRATION__TABLE_VARIANT": "calibration.table_variant",
    "SERRE_SAMPLER__MAX_RETRIES": "sampler.max_retries",
    "SERRE_SAMPLER__SEED": "sampler.seed",
    "SERRE_ENUMERATION__CHECK_INVARIANTS": "enumeration.check_invariants",
    "SERRE_ENUMERATION__BATCH_CONCURRENCY": "enumeration.batch_concurrency",
    "SERRE_LOGGING__LEVEL": "logging.level",
    "SERRE_ENVIRONMENT": "environment",
}
