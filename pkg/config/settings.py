#!/usr/bin/env python3
"""
config/settings.py - YAML-backed configuration for symcone.
"""

from __future__ import annotations

import asyncio
import copy
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from validation.error_protocol import ConfigurationError

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parent / "settings.yml"

DEFAULTS: Dict[str, Any] = {
    "series": {"default_truncation": 10, "workers": 1, "executor": "thread"},
    "output": {"format": "json", "indent": 2},
    "logging": {"level": "WARNING", "log_file": None},
}

_CHOICES = {
    "series.executor": ("thread", "process"),
    "output.format": ("json", "csv", "text"),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """
    Settings loaded from YAML and merged over built-in defaults.

    Keys are dotted paths:

        cfg = ConfigManager.from_file(Path("config/settings.yml"))
        cfg.get("series.workers")        # -> 1
        cfg.set("output.format", "csv")
    """

    def __init__(
        self,
        config_path: Optional[Path] = None,
        default_config: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.config_path = config_path
        self.config: Dict[str, Any] = copy.deepcopy(default_config or DEFAULTS)

    @classmethod
    def from_file(cls, config_path: Optional[Path] = None) -> "ConfigManager":
        """Build and load synchronously (CLI entry point)."""
        if config_path is not None and not config_path.is_file():
            raise ConfigurationError(f"settings file not found: {config_path}")
        manager = cls(config_path or DEFAULT_SETTINGS_PATH)
        asyncio.run(manager.load())
        return manager

    async def load(self) -> None:
        """
        Read the YAML file and merge it over the current settings.

        A missing file leaves the settings untouched.
        """
        if self.config_path is None or not self.config_path.exists():
            return
        loop = asyncio.get_running_loop()
        content = await loop.run_in_executor(None, self.config_path.read_text)
        try:
            data = yaml.safe_load(content)
        except yaml.YAMLError as exc:
            raise ConfigurationError(
                f"cannot parse {self.config_path}: {exc}"
            ) from exc
        if data is None:
            return
        if not isinstance(data, dict):
            raise ConfigurationError(
                f"{self.config_path}: top level must be a mapping"
            )
        self.config = _merge(self.config, data)
        self._check()

    def _check(self) -> None:
        for key, allowed in _CHOICES.items():
            value = self.get(key)
            if value not in allowed:
                raise ConfigurationError(
                    f"{key} must be one of {', '.join(allowed)}, got {value!r}"
                )
        for key in ("series.default_truncation", "output.indent"):
            value = self.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ConfigurationError(f"{key} must be a nonnegative integer")
        workers = self.get("series.workers")
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            raise ConfigurationError("series.workers must be an integer >= 1")

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        node: Any = self.config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def set(self, key: str, value: Any) -> None:
        parts = key.split(".")
        node = self.config
        for part in parts[:-1]:
            child = node.get(part)
            if not isinstance(child, dict):
                child = {}
                node[part] = child
            node = child
        node[parts[-1]] = value
