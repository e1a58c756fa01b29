#!/usr/bin/env python3
"""
schemas/__init__.py - JSON Schemas for documents emitted by the symcone CLI.

- series.schema.json         truncated series {"truncation", "coefficients"}
- terms.schema.json          rational term list
- stats.schema.json          per-element descent statistics
- verify_report.schema.json  verification suite report

Validation lives in validation/schema_validator.py.
"""

from __future__ import annotations

from pathlib import Path
from typing import List

SCHEMAS_DIR: Path = Path(__file__).resolve().parent


def list_schemas() -> List[str]:
    return sorted(p.name for p in SCHEMAS_DIR.glob("*.schema.json"))


__all__ = ["SCHEMAS_DIR", "list_schemas"]
