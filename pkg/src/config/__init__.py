"""
Configuration package for the Serre weight toolkit.

This package provides configuration management with support for:
- .env file configuration
- Environment variable parsing
- An optional YAML overlay
- Configuration validation
"""

from .models import (
    SerreConfig,
    CalibrationConfig,
    SamplerConfig,
    EnumerationConfig,
    LoggingConfig,
    CSign,
    TableVariant,
    LogLevel,
    LogFormat,
)

from .settings import (
    ConfigManager,
    ConfigurationError,
    get_config,
    get_config_manager,
    reload_config,
    use_yaml_overlay,
)

__all__ = [
    # Configuration models
    "SerreConfig",
    "CalibrationConfig",
    "SamplerConfig",
    "EnumerationConfig",
    "LoggingConfig",

    # Enums
    "CSign",
    "TableVariant",
    "LogLevel",
    "LogFormat",

    # Configuration management
    "ConfigManager",
    "ConfigurationError",
    "get_config",
    "get_config_manager",
    "reload_config",
    "use_yaml_overlay",
]
