"""
JSON Schema checks for emitted documents.
"""

from __future__ import annotations

import pytest
from jsonschema import Draft202012Validator

from conegeom import cone_spec, default_weights
from genfunc import build_general, expand
from identities import verify_comaj_distribution
from schemas import list_schemas
from validation.error_protocol import DocumentError
from validation.schema_validator import load_schema, require_valid, validate_document
from tests.assertions import require


def test_schemas_are_well_formed() -> None:
    names = list_schemas()
    require(
        names == ["series.schema.json", "stats.schema.json", "terms.schema.json", "verify_report.schema.json"],
        f"got {names}",
    )
    for name in names:
        Draft202012Validator.check_schema(load_schema(name))


def test_emitted_documents_validate() -> None:
    spec = cone_spec("B", 3, (2, 4))
    rsum = build_general(spec)
    require(validate_document(rsum.as_document(), "terms.schema.json") == [], "terms")
    series = expand(rsum, 5, grading=default_weights(spec))
    require(series.coefficients == (1, 1, 1, 1, 5, 5), f"got {series.coefficients}")
    require(validate_document(series.to_document(), "series.schema.json") == [], "series")
    report = verify_comaj_distribution(2).as_dict()
    require(validate_document(report, "verify_report.schema.json") == [], "report")


def test_invalid_documents_reported() -> None:
    errors = validate_document({"truncation": 1, "coefficients": [1, "x"]}, "series.schema.json")
    require(len(errors) == 2, f"got {errors}")
    require(errors[0]["path"] == ["coefficients", 0], "path points at the entry")
    with pytest.raises(DocumentError):
        require_valid({"truncation": -1, "coefficients": []}, "series.schema.json")


def test_unknown_schema() -> None:
    with pytest.raises(FileNotFoundError):
        load_schema("nope.schema.json")
