#!/usr/bin/env python3
"""
cli/render.py - Render CLI documents as json, csv or text.

JSON documents are schema-checked before rendering. Big integers are
written as decimal strings in JSON.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from genfunc.series import TruncatedSeries
from genfunc.terms import RationalSum
from identities.verify import Verification
from validation.error_protocol import SpecificationError
from validation.schema_validator import require_valid

STATS_HEADER = ("element", "descents", "des", "maj", "comaj", "cobin")


def _json(doc: Any, schema: str, indent: int) -> str:
    require_valid(doc, schema)
    return json.dumps(doc, indent=indent or None) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _vec(v: Sequence[int]) -> str:
    return " ".join(str(x) for x in v)


def render_terms(rsum: RationalSum, fmt: str, indent: int = 2) -> str:
    if fmt == "json":
        return _json(rsum.as_document(), "terms.schema.json", indent)
    if fmt == "csv":
        return _csv(
            ("term", "numerator", "denominators"),
            [
                (i, _vec(t.numerator), "; ".join(_vec(d) for d in t.denominators))
                for i, t in enumerate(rsum.terms)
            ],
        )
    lines = [
        f"z^({_vec(t.numerator)}) / "
        + " ".join(f"(1 - z^({_vec(d)}))" for d in t.denominators)
        for t in rsum.terms
    ]
    return "\n".join(lines) + "\n"


def render_series(series: TruncatedSeries, fmt: str, indent: int = 2) -> str:
    if fmt == "json":
        return _json(series.to_document(), "series.schema.json", indent)
    if fmt == "csv":
        return _csv(("degree", "coefficient"), list(enumerate(series.coefficients)))
    return " ".join(str(c) for c in series.coefficients) + "\n"


def render_stats(rows: List[Dict[str, Any]], fmt: str, indent: int = 2) -> str:
    if fmt == "json":
        return _json(rows, "stats.schema.json", indent)
    table = [
        (r["element"], _vec(r["descents"]), r["des"], r["maj"], r["comaj"], r["cobin"])
        for r in rows
    ]
    if fmt == "csv":
        return _csv(STATS_HEADER, table)
    width = max(len(r[0]) for r in table)
    lines = ["  ".join([STATS_HEADER[0].ljust(width), *STATS_HEADER[1:]])]
    for row in table:
        lines.append(
            "  ".join([row[0].ljust(width), f"{{{row[1]}}}", *(str(v) for v in row[2:])])
        )
    return "\n".join(lines) + "\n"


def render_report(result: Verification, fmt: str, indent: int = 2) -> str:
    if fmt == "json":
        return _json(result.as_dict(), "verify_report.schema.json", indent)
    if fmt == "csv":
        return _csv(
            ("check", "passed", "first_mismatch"),
            [
                (c.name, c.passed, "" if c.first_mismatch is None else c.first_mismatch)
                for c in result.checks
            ],
        )
    lines = []
    for c in result.checks:
        status = "PASS" if c.passed else "FAIL"
        suffix = f"  (first mismatch at degree {c.first_mismatch})" if c.first_mismatch is not None else ""
        lines.append(f"{status}  {c.name}{suffix}")
    lines.append(f"{'PASSED' if result.passed else 'FAILED'}: {result.suite}")
    return "\n".join(lines) + "\n"


def emit(text: str, out: Optional[Path]) -> None:
    """Write to stdout, or to `out` when given."""
    if out is None:
        print(text, end="")
        return
    if out.is_dir():
        raise SpecificationError(f"--out {out} is a directory")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
