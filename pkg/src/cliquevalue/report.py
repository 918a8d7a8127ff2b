"""Report documents: dict builders plus JSON/CSV emit and parse."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .bounds import BoundReport, ProofChainReport
from .cliques import HandshakingReport

__all__ = [
    "bound_row",
    "handshaking_row",
    "chain_doc",
    "emit_report",
    "parse_report",
    "BOUND_COLUMNS",
    "FINDING_COLUMNS",
]

BOUND_COLUMNS = ["k", "eligible", "lhs", "rhs_num", "rhs_den", "holds", "slack_num", "slack_den"]
FINDING_COLUMNS = ["kind", "graph", "k", "step", "lhs_num", "lhs_den", "rhs_num", "rhs_den"]


def _num_den(x: Fraction | None) -> tuple[int | None, int | None]:
    if x is None:
        return None, None
    x = Fraction(x)
    return x.numerator, x.denominator


def bound_row(b: BoundReport) -> dict[str, Any]:
    rhs_num, rhs_den = _num_den(b.rhs)
    slack_num, slack_den = _num_den(b.slack)
    return {
        "k": b.k,
        "eligible": b.eligible,
        "lhs": b.lhs,
        "rhs_num": rhs_num,
        "rhs_den": rhs_den,
        "holds": b.holds,
        "slack_num": slack_num,
        "slack_den": slack_den,
    }


def handshaking_row(h: HandshakingReport) -> dict[str, Any]:
    return {"k": h.k, "sum": h.value_sum, "rhs": h.rhs, "equal": h.equal}


def chain_doc(r: ProofChainReport, shift: int = 0) -> dict[str, Any]:
    steps = []
    for s in r.steps:
        lhs_num, lhs_den = _num_den(s.lhs)
        rhs_num, rhs_den = _num_den(s.rhs)
        steps.append({
            "id": s.id,
            "holds": s.holds,
            "lhs_num": lhs_num,
            "lhs_den": lhs_den,
            "rhs_num": rhs_num,
            "rhs_den": rhs_den,
        })
    return {
        "k": r.k,
        "eligible": True,
        "A_size": r.a_size,
        "B_size": r.b_size,
        "optimal": r.packing.optimal,
        "warning": r.warning,
        "A": [[v + shift for v in q.vertices] for q in r.packing.members],
        "steps": steps,
        "final": bound_row(r.final_bound),
    }


def emit_report(document: dict[str, Any], fmt: str = "json") -> bytes:
    """Serialize a report. CSV flattens the ``bounds`` rows, or ``findings`` if there are no bounds."""
    if fmt == "json":
        return (json.dumps(document, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        if "bounds" in document:
            columns, rows = BOUND_COLUMNS, document["bounds"]
        else:
            columns, rows = FINDING_COLUMNS, document.get("findings", [])
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: _csv_cell(row.get(c)) for c in columns})
        return buf.getvalue().encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")


def _csv_cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _csv_value(s: str) -> Any:
    if s == "":
        return None
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        return s


def parse_report(data: bytes | str, fmt: str = "json") -> Any:
    """Inverse of :func:`emit_report`; CSV gives back the list of flattened rows."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "json":
        return json.loads(text)
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        return [{k: _csv_value(v) for k, v in row.items()} for row in reader]
    raise ValueError(f"unknown report format {fmt!r}")
