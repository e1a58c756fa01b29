"""
Exception taxonomy and exit-code routing.
"""

from __future__ import annotations

import pytest

from validation.error_protocol import (
    EXIT_EXPANSION,
    EXIT_INVALID_SPEC,
    EXIT_VERIFICATION_FAILED,
    ConfigurationError,
    DimensionError,
    DocumentError,
    ErrorClass,
    ExpansionError,
    SaliencyError,
    SpecificationError,
    classify_exception,
)
from tests.assertions import require


@pytest.mark.parametrize(
    "exc, error_class, exit_code",
    [
        (SpecificationError("bad"), ErrorClass.SPECIFICATION, EXIT_INVALID_SPEC),
        (DimensionError("len"), ErrorClass.SPECIFICATION, EXIT_INVALID_SPEC),
        (ExpansionError("neg"), ErrorClass.EXPANSION, EXIT_EXPANSION),
        (SaliencyError("flat"), ErrorClass.EXPANSION, EXIT_EXPANSION),
        (ConfigurationError("yaml"), ErrorClass.CONFIGURATION, EXIT_INVALID_SPEC),
        (DocumentError("schema"), ErrorClass.OPERATIONAL, EXIT_VERIFICATION_FAILED),
    ],
)
def test_classification(exc, error_class, exit_code) -> None:
    signal = classify_exception(exc, source="test")
    require(signal.error_class is error_class, f"{type(exc).__name__} -> {signal.error_class}")
    require(signal.exit_code == exit_code, f"{type(exc).__name__} -> exit {signal.exit_code}")
    require(signal.context["exception_type"] == type(exc).__name__, "type recorded")


def test_builtin_bases() -> None:
    require(issubclass(SpecificationError, ValueError), "spec errors are ValueErrors")
    require(issubclass(ExpansionError, ArithmeticError), "expansion errors are ArithmeticErrors")


def test_diagnostic_uses_first_line() -> None:
    signal = classify_exception(SpecificationError("first\nsecond"), source="cli.series")
    require(signal.diagnostic() == "symcone: error: first", signal.diagnostic())
    document = signal.as_dict()
    require(document["error_class"] == "specification" and document["source"] == "cli.series", "as_dict")
