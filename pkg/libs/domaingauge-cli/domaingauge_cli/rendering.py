"""Canonical JSON and CSV rendering.

Keys are sorted and floats keep ``FLOAT_DIGITS`` significant digits, so the same
inputs and seed always render to the same bytes.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import sys
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
from domaingauge.seqrep.codec import loads, rational_to_json

from domaingauge_cli.core import FLOAT_DIGITS


def round_float(value: float) -> float:
    """Round to ``FLOAT_DIGITS`` significant digits."""
    return float(f"{value:.{FLOAT_DIGITS}g}")


def canonicalize(value: Any) -> Any:
    """Convert a payload into plain JSON types with rounded floats."""
    if isinstance(value, dict):
        return {str(k): canonicalize(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [canonicalize(v) for v in value]
    if isinstance(value, bool | np.bool_):
        return bool(value)
    if isinstance(value, int | np.integer):
        return int(value)
    if isinstance(value, float | np.floating):
        return round_float(float(value))
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, Enum):
        return canonicalize(value.value)
    return value


def dumps(value: Any) -> str:
    """Render canonical, indented JSON with a trailing newline."""
    return json.dumps(canonicalize(value), sort_keys=True, indent=2) + "\n"


def digest(value: Any) -> str:
    """SHA-256 of the compact canonical JSON of ``value``."""
    compact = json.dumps(canonicalize(value), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(compact.encode("utf-8")).hexdigest()


def read_json(path: str) -> Any:
    """Read a JSON document from a file, or from stdin when ``path`` is ``-``.

    Raises:
        FileNotFoundError: If the file does not exist
        RepresentationError: If the text is not valid JSON
    """
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return loads(text)


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    """Render table rows as CSV, header taken from the first row."""
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: f"{v:.{FLOAT_DIGITS}g}" if isinstance(v, float) else v for k, v in row.items()})
    return buffer.getvalue()


def write_output(text: str, output: str | None) -> None:
    """Write to ``output`` when given, otherwise to stdout."""
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
