"""
validation package - error taxonomy and output-document schema checks.
"""

from __future__ import annotations

from .error_protocol import (
    ConfigurationError,
    DimensionError,
    DocumentError,
    ErrorClass,
    ErrorSignal,
    ExpansionError,
    SaliencyError,
    Severity,
    SpecificationError,
    SymconeError,
    classify_exception,
    report_failure,
)

__all__ = [
    "ConfigurationError",
    "DimensionError",
    "DocumentError",
    "ErrorClass",
    "ErrorSignal",
    "ExpansionError",
    "SaliencyError",
    "Severity",
    "SpecificationError",
    "SymconeError",
    "classify_exception",
    "report_failure",
]
