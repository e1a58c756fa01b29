#!/usr/bin/env python3
"""
validation/error_protocol.py - Exception taxonomy and exit-code routing.

Library code raises the exceptions below; only the CLI turns them into
exit codes through classify_exception().
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from monitoring.structured_logger import log_event

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_SPEC = 2
EXIT_EXPANSION = 3


class SymconeError(Exception):
    """Root of every error raised by symcone."""


class SpecificationError(SymconeError, ValueError):
    """Invalid cone spec, group rank, kind mismatch or weight misuse."""


class DimensionError(SpecificationError):
    """A vector does not have the dimension its context requires."""


class ExpansionError(SymconeError, ArithmeticError):
    """A rational sum or enumeration cannot be expanded as a power series."""


class SaliencyError(ExpansionError):
    """A cone generator has nonpositive grading."""


class ConfigurationError(SymconeError):
    """Settings file is unreadable or malformed."""


class DocumentError(SymconeError):
    """An output document failed schema validation."""


class ErrorClass(str, Enum):
    SPECIFICATION = "specification"
    EXPANSION = "expansion"
    CONFIGURATION = "configuration"
    OPERATIONAL = "operational"


class Severity(str, Enum):
    CRITICAL = "critical"
    MAJOR = "major"
    MINOR = "minor"


@dataclass(frozen=True)
class ErrorSignal:
    message: str
    error_class: ErrorClass
    severity: Severity
    source: str
    exit_code: int
    context: Dict[str, Any] = field(default_factory=dict)

    def diagnostic(self) -> str:
        """One-line message for the error stream."""
        first_line = self.message.splitlines()[0] if self.message else ""
        return f"symcone: error: {first_line}"

    def as_dict(self) -> Dict[str, Any]:
        return {
            "message": self.message,
            "error_class": self.error_class.value,
            "severity": self.severity.value,
            "source": self.source,
            "exit_code": self.exit_code,
            "context": dict(self.context),
        }


def classify_exception(exc: BaseException, *, source: str) -> ErrorSignal:
    """
    Map an exception to an ErrorSignal carrying the process exit code.

    Order matters: SaliencyError is an ExpansionError and DimensionError is
    a SpecificationError.
    """
    context = {"exception_type": type(exc).__name__}
    if isinstance(exc, ExpansionError):
        return ErrorSignal(
            str(exc), ErrorClass.EXPANSION, Severity.MAJOR, source,
            EXIT_EXPANSION, context,
        )
    if isinstance(exc, SpecificationError):
        return ErrorSignal(
            str(exc), ErrorClass.SPECIFICATION, Severity.MINOR, source,
            EXIT_INVALID_SPEC, context,
        )
    if isinstance(exc, ConfigurationError):
        return ErrorSignal(
            str(exc), ErrorClass.CONFIGURATION, Severity.MINOR, source,
            EXIT_INVALID_SPEC, context,
        )
    return ErrorSignal(
        str(exc), ErrorClass.OPERATIONAL, Severity.CRITICAL, source,
        EXIT_VERIFICATION_FAILED, context,
    )


def report_failure(signal: ErrorSignal) -> None:
    log_event("cli.command.failed", signal.as_dict())
