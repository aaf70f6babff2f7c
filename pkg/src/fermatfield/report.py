"""Report envelopes and their JSON / JSON-lines / CSV serialisation.

Output is byte-stable for a fixed config: keys are written in a fixed
order, rows keep the order the producer gave them, and the only
run-dependent value (the timestamp) sits in ``header`` which diff mode
omits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .errors import FermatFieldError

SCHEMA = 1

CSV_COLUMNS = {
    "fermat survey": ["p", "ext_deg", "q", "n", "gcd_class", "nontrivial_count", "flt_holds"],
    "curve reduce": ["p", "type", "conductor_exponent", "point_count", "a_p"],
    "curve lseries": ["p", "a_p", "status"],
    "curve torsion": ["p", "m", "k", "q", "count", "complete"],
    "exponent core": ["n", "core"],
    "metric search": ["metric", "n", "A", "B", "C", "dist_pow_AB", "dist_pow_AC", "dist_pow_BC"],
}


class IoFailure(FermatFieldError, OSError):
    pass


@dataclass
class Envelope:
    command: str
    config: dict
    rows: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    timestamp: str | None = None

    def to_dict(self, diff_mode: bool = False, include_rows: bool = True) -> dict:
        doc = {"schema": SCHEMA, "tool": "fermatfield", "version": __version__}
        if not diff_mode:
            doc["header"] = {"timestamp": self.timestamp or now()}
        doc["command"] = self.command
        doc["config"] = self.config
        doc["summary"] = self.summary
        doc["verdicts"] = self.verdicts
        if include_rows:
            doc["row_count"] = len(self.rows)
            doc["rows"] = self.rows
        return doc


def now() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def jsonl(rows: list[dict]) -> str:
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in rows)


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return v


def to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def render(envelope: Envelope, fmt: str = "json", diff_mode: bool = False) -> dict[str, str]:
    """File name -> contents for a report."""
    if fmt == "json":
        return {
            "report.json": dumps(envelope.to_dict(diff_mode)),
            "rows.jsonl": jsonl(envelope.rows),
        }
    if fmt == "csv":
        return {
            "report.json": dumps(envelope.to_dict(diff_mode, include_rows=False)),
            "rows.csv": to_csv(envelope.rows, CSV_COLUMNS.get(envelope.command)),
        }
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(envelope: Envelope, fmt: str, out_dir, diff_mode: bool = False) -> list[Path]:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for name, text in render(envelope, fmt, diff_mode).items():
            path = out / name
            path.write_text(text)
            written.append(path)
    except OSError as exc:
        raise IoFailure(f"cannot write report to {out}: {exc}") from exc
    return written
