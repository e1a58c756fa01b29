#!/usr/bin/env python3
"""
validation/schema_validator.py - JSON Schema checks for emitted documents.

Schemas live in ``schemas/`` at the repository root and use Draft 2020-12.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List

from jsonschema import Draft202012Validator

from schemas import SCHEMAS_DIR
from validation.error_protocol import DocumentError

SCHEMA_DIR = SCHEMAS_DIR

__all__ = [
    "SCHEMA_DIR",
    "load_schema",
    "get_validator",
    "validate_document",
    "require_valid",
]


def load_schema(schema_name: str) -> Dict[str, Any]:
    """Load a JSON schema from the schemas directory."""
    schema_path = SCHEMA_DIR / schema_name
    if not schema_path.exists():
        raise FileNotFoundError(f"Schema file not found: {schema_path}")
    return json.loads(schema_path.read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def get_validator(schema_name: str) -> Draft202012Validator:
    schema = load_schema(schema_name)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def validate_document(payload: Any, schema_name: str) -> List[Dict[str, Any]]:
    """Validate payload and return normalized error entries (empty if valid)."""
    validator = get_validator(schema_name)
    errors = sorted(validator.iter_errors(payload), key=lambda e: list(e.path))
    return [
        {
            "message": error.message,
            "path": list(error.path),
            "schema_path": list(error.schema_path),
        }
        for error in errors
    ]


def require_valid(payload: Any, schema_name: str) -> Any:
    errors = validate_document(payload, schema_name)
    if errors:
        details = "; ".join(
            f"{'/'.join(str(p) for p in err['path']) or '<root>'}: {err['message']}"
            for err in errors
        )
        raise DocumentError(f"{schema_name} validation failed: {details}")
    return payload
