"""Configuration package: YAML settings and the ConfigManager."""

from __future__ import annotations

from .settings import DEFAULT_SETTINGS_PATH, DEFAULTS, ConfigManager

__all__ = ["ConfigManager", "DEFAULTS", "DEFAULT_SETTINGS_PATH"]
