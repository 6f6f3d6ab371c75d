"""
Configuration management for the Serre weight toolkit.

Settings come from environment variables (and a .env file through
pydantic-settings), optionally overlaid by a YAML file.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from .models import SerreConfig


logger = logging.getLogger(__name__)


class ConfigurationError(Exception):
    """Raised when configuration loading or validation fails."""
    pass


class ConfigManager:
    """
    Configuration manager that handles loading from environment variables.

    Supports:
    - .env file loading
    - an optional YAML overlay
    - caching of the loaded configuration
    """

    def __init__(self, yaml_path: Optional[Path] = None):
        self.yaml_path = yaml_path
        self.config: Optional[SerreConfig] = None

    def _read_yaml(self) -> Dict[str, Any]:
        if self.yaml_path is None:
            return {}
        try:
            with open(self.yaml_path, "r", encoding="utf-8") as fh:
                data = yaml.safe_load(fh) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"Cannot read {self.yaml_path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{self.yaml_path} must contain a mapping")
        return data

    def load_config(self) -> SerreConfig:
        """
        Load configuration.

        Returns:
            Validated configuration object

        Raises:
            ConfigurationError: If configuration loading or validation fails
        """
        try:
            self.config = SerreConfig(**self._read_yaml())
        except ValidationError as e:
            error_msg = f"Configuration validation failed: {e}"
            logger.error(error_msg)
            raise ConfigurationError(error_msg) from e

        logger.debug(
            "Configuration loaded: environment=%s c_sign=%s table=%s",
            self.config.environment,
            self.config.calibration.c_sign.value,
            self.config.calibration.table_variant.value,
        )
        return self.config

    def get_config(self) -> SerreConfig:
        """Get current configuration, loading if not already loaded."""
        if self.config is None:
            return self.load_config()
        return self.config

    def reload_config(self) -> SerreConfig:
        """Force reload configuration."""
        logger.info("Force reloading configuration...")
        self.config = None
        return self.load_config()


# Global configuration manager instance
_config_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """Get the global configuration manager instance."""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def use_yaml_overlay(yaml_path: Path) -> SerreConfig:
    """Point the global manager at a YAML file and reload."""
    global _config_manager
    _config_manager = ConfigManager(yaml_path=yaml_path)
    return _config_manager.load_config()


def get_config() -> SerreConfig:
    """
    Get the current configuration.

    This is the main function used throughout the library to access configuration.
    """
    return get_config_manager().get_config()


def reload_config() -> SerreConfig:
    """Force reload configuration from the environment."""
    return get_config_manager().reload_config()
