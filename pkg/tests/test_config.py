"""
test_config.py - settings loading and validation.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from config import DEFAULT_SETTINGS_PATH, DEFAULTS, ConfigManager
from validation.error_protocol import ConfigurationError
from tests.assertions import require


def _write(tmp_path: Path, text: str) -> Path:
    path = tmp_path / "settings.yml"
    path.write_text(text, encoding="utf-8")
    return path


def test_shipped_settings_match_defaults() -> None:
    cfg = ConfigManager.from_file()
    require(cfg.config_path == DEFAULT_SETTINGS_PATH, "default path used")
    require(cfg.config == DEFAULTS, "settings.yml mirrors the built-in defaults")


def test_override_merges_over_defaults(tmp_path: Path) -> None:
    cfg = ConfigManager.from_file(_write(tmp_path, "series:\n  workers: 4\n"))
    require(cfg.get("series.workers") == 4, "override applied")
    require(cfg.get("series.default_truncation") == 10, "sibling default kept")
    require(cfg.get("output.format") == "json", "other sections kept")


def test_empty_file_keeps_defaults(tmp_path: Path) -> None:
    require(ConfigManager.from_file(_write(tmp_path, "")).config == DEFAULTS, "empty YAML")


@pytest.mark.parametrize(
    "text",
    [
        "series:\n  executor: fork\n",
        "output:\n  format: xml\n",
        "series:\n  workers: 0\n",
        "series:\n  default_truncation: -1\n",
        "output:\n  indent: two\n",
        "- a\n- b\n",
        "series: [unclosed\n",
    ],
)
def test_invalid_settings_rejected(tmp_path: Path, text: str) -> None:
    with pytest.raises(ConfigurationError):
        ConfigManager.from_file(_write(tmp_path, text))


def test_missing_explicit_path(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        ConfigManager.from_file(tmp_path / "nope.yml")


def test_get_and_set_dotted_keys() -> None:
    cfg = ConfigManager()
    require(cfg.get("logging.level") == "WARNING", "default level")
    require(cfg.get("no.such.key", "fallback") == "fallback", "default for missing keys")
    cfg.set("output.format", "csv")
    cfg.set("extra.nested.value", 3)
    require(cfg.get("output.format") == "csv", "set existing")
    require(cfg.get("extra.nested.value") == 3, "set creates sections")
    require(DEFAULTS["output"]["format"] == "json", "defaults are not mutated")
