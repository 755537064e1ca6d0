"""Reading and writing exact matrix documents.

A matrix document is JSON-shaped text with every rational carried as a
string, never as a number, so exactness survives any JSON parser:

    {"rows": 2, "cols": 2,
     "std":  [["1", "1/2"], ["0", "-3"]],
     "dual": [["0", "0"],   ["2/7", "1"]]}

Strings must match -?[0-9]+(/[1-9][0-9]*)?; a zero denominator therefore
fails at the syntax level.  Output documents always print in lowest terms
(the arithmetic keeps fractions reduced), row-major, with sorted keys, so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import ParseError
from .matrices import DualMatrix, RealMatrix

RATIONAL_PATTERN = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")

DOCUMENT_KEYS = ("rows", "cols", "std", "dual")


def _parse_rational(value, location: str) -> Fraction:
    if not isinstance(value, str):
        raise ParseError("rational entries must be strings", location)
    if not RATIONAL_PATTERN.fullmatch(value):
        raise ParseError(f"not a rational literal: {value!r}", location)
    return Fraction(value)


def _parse_grid(value, rows: int, cols: int, name: str) -> RealMatrix:
    if not isinstance(value, list) or len(value) != rows:
        raise ParseError(f"expected {rows} rows", name)
    entries = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected {cols} entries", f"{name}[{i}]")
        entries.append(
            tuple(
                _parse_rational(cell, f"{name}[{i}][{j}]")
                for j, cell in enumerate(row)
            )
        )
    return RealMatrix(rows, cols, tuple(entries))


def parse_matrix(text: bytes | str) -> DualMatrix:
    """Parse a matrix document; ParseError names the offending field."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}", "document") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", "document") from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "document")
    missing = [k for k in DOCUMENT_KEYS if k not in data]
    extra = [k for k in data if k not in DOCUMENT_KEYS]
    if missing or extra:
        raise ParseError(
            f"object must have exactly the keys {list(DOCUMENT_KEYS)}"
            f" (missing {missing}, unexpected {extra})",
            "document",
        )
    rows, cols = data["rows"], data["cols"]
    for label, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ParseError("must be a nonnegative integer", label)
    return DualMatrix(
        _parse_grid(data["std"], rows, cols, "std"),
        _parse_grid(data["dual"], rows, cols, "dual"),
    )


def _grid(m: RealMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.entries]


def matrix_to_document(m: DualMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "std": _grid(m.std), "dual": _grid(m.dual)}


def real_to_document(m: RealMatrix) -> dict:
    """Real matrices travel as dual documents with a zero dual part."""
    return matrix_to_document(DualMatrix.from_real(m))


def print_matrix(m: DualMatrix) -> str:
    """Canonical text form of one matrix; parse_matrix inverts it."""
    return json.dumps(matrix_to_document(m), sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class ResultDocument:
    """What one command invocation reports.

    status is one of ok / does-not-exist / inconsistent / error; inputs
    records each input file with its content digest; payload carries the
    matrices and diagnostics, rationals always as strings.
    """

    status: str
    operation: str
    inputs: tuple[dict, ...] = ()
    payload: dict = field(default_factory=dict)

    def to_json(self) -> str:
        body = {
            "status": self.status,
            "operation": self.operation,
            "inputs": list(self.inputs),
            "payload": self.payload,
        }
        return json.dumps(body, sort_keys=True, indent=2) + "\n"
