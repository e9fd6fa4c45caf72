"""CSV and JSON serialization of soft sets and decision reports.

CSV grammar: a header ``id,<param1>,<param2>,...``, one row per
alternative with cells written ``"m,n"`` (quoted because of the comma) or
``(m,n)``, and a final row with the id literal ``__f__`` carrying the
parameter importances.

JSON documents are self-describing: ``universe``, ``parameters`` (name +
importance), and ``cells``; reports add ``weights``, ``measures``, and
``ranking``.  Rendering is deterministic and floats round-trip exactly.
"""

from __future__ import annotations

import csv
import json
from io import StringIO

from .decision import DecisionReport
from .errors import InvalidPFN, NotPythagorean, OutOfRange, ParseError
from .pfn import PFN, OrderKind, pfn_from_text, pfn_to_text
from .softset import PFParameter, PhiSoftSet, build

IMPORTANCE_ROW_ID = "__f__"

_ORDER_TOKEN = {
    OrderKind.ES_THEN_MEMBERSHIP: "es",
    OrderKind.MEMBERSHIP_THEN_ES: "m",
    OrderKind.SCORE_ACCURACY: "sfaf",
}


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    return data


def _reassemble_parenthesized(fields: list[str], line: int) -> list[str]:
    """Re-join ``(m`` + ``n)`` pieces that the comma split apart."""
    out: list[str] = []
    pending: list[str] | None = None
    for piece in fields:
        if pending is not None:
            pending.append(piece)
            if piece.rstrip().endswith(")"):
                out.append(",".join(pending))
                pending = None
        elif piece.lstrip().startswith("(") and not piece.rstrip().endswith(")"):
            pending = [piece]
        else:
            out.append(piece)
    if pending is not None:
        raise ParseError("unclosed '(' in cell", line=line)
    return out


def _parse_cell(text: str, what: str, line: int, column: int) -> PFN:
    try:
        return pfn_from_text(text)
    except ParseError as exc:
        raise ParseError(str(exc), line=line, column=column) from None
    except (OutOfRange, NotPythagorean) as exc:
        raise InvalidPFN(f"{what} at line {line}: {exc}") from None


def parse_csv(data: bytes | str) -> PhiSoftSet:
    """Parse the CSV table grammar into a validated soft set."""
    rows = [
        (i + 1, fields)
        for i, fields in enumerate(csv.reader(_as_text(data).splitlines()))
        if any(f.strip() for f in fields)
    ]
    if not rows:
        raise ParseError("empty document")

    header_line, header = rows[0]
    header = [h.strip() for h in header]
    if not header or header[0] != "id":
        raise ParseError("header must start with 'id'", line=header_line)
    names = header[1:]
    if not names:
        raise ParseError("header names no parameters", line=header_line)

    universe: list[str] = []
    cells: dict[tuple[str, str], PFN] = {}
    importances: dict[str, PFN] | None = None
    for line, fields in rows[1:]:
        if importances is not None:
            raise ParseError(
                f"row after the {IMPORTANCE_ROW_ID} importance row", line=line
            )
        alt = fields[0].strip()
        values = _reassemble_parenthesized(fields[1:], line)
        if len(values) != len(names):
            raise ParseError(
                f"expected {len(names)} cells, got {len(values)}", line=line
            )
        if alt == IMPORTANCE_ROW_ID:
            importances = {
                name: _parse_cell(
                    text, f"importance of {name!r}", line, column + 2
                )
                for column, (name, text) in enumerate(zip(names, values))
            }
            continue
        universe.append(alt)
        for column, (name, text) in enumerate(zip(names, values)):
            cells[(alt, name)] = _parse_cell(
                text, f"cell ({alt}, {name})", line, column + 2
            )

    if not universe:
        raise ParseError("no alternatives")
    if importances is None:
        raise ParseError(f"missing {IMPORTANCE_ROW_ID} importance row")
    parameters = [PFParameter(name, importances[name]) for name in names]
    return build(universe, parameters, cells)


def emit_csv(softset: PhiSoftSet) -> bytes:
    """Render a soft set in the CSV grammar (deterministic bytes)."""
    lines = [["id", *softset.parameter_names]]
    for alt in softset.universe:
        lines.append([alt, *(pfn_to_text(c) for c in softset.row(alt))])
    lines.append(
        [IMPORTANCE_ROW_ID, *(pfn_to_text(p.importance) for p in softset.parameters)]
    )
    sink = StringIO()
    csv.writer(sink, lineterminator="\n").writerows(lines)
    return sink.getvalue().encode("utf-8")


# --- JSON -----------------------------------------------------------------


def _expect(doc, path: str, kind: type, name: str):
    if not isinstance(doc, kind):
        raise ParseError(f"expected {name}", path=path)
    return doc


def _number(doc, path: str) -> float:
    if isinstance(doc, bool) or not isinstance(doc, (int, float)):
        raise ParseError("expected a number", path=path)
    return float(doc)


def _pfn_from_fields(obj: dict, path: str, what: str) -> PFN:
    for key in ("m", "n"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", path=path)
    m = _number(obj["m"], f"{path}.m")
    n = _number(obj["n"], f"{path}.n")
    try:
        return PFN(m, n)
    except (OutOfRange, NotPythagorean) as exc:
        raise InvalidPFN(f"{what} ({path}): {exc}") from None


def parse_json(data: bytes | str) -> PhiSoftSet:
    """Parse a set (or report) document; reports yield their combined set."""
    try:
        doc = json.loads(_as_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None

    _expect(doc, "$", dict, "an object")
    for key in ("universe", "parameters", "cells"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", path="$")

    universe = _expect(doc["universe"], "$.universe", list, "an array")
    alts = [
        _expect(a, f"$.universe[{i}]", str, "a string") for i, a in enumerate(universe)
    ]

    parameters = []
    for i, entry in enumerate(_expect(doc["parameters"], "$.parameters", list, "an array")):
        path = f"$.parameters[{i}]"
        _expect(entry, path, dict, "an object")
        if "name" not in entry or "importance" not in entry:
            raise ParseError("missing key 'name' or 'importance'", path=path)
        name = _expect(entry["name"], f"{path}.name", str, "a string")
        importance = _pfn_from_fields(
            _expect(entry["importance"], f"{path}.importance", dict, "an object"),
            f"{path}.importance",
            f"importance of {name!r}",
        )
        parameters.append(PFParameter(name, importance))

    cells: dict[tuple[str, str], PFN] = {}
    for i, entry in enumerate(_expect(doc["cells"], "$.cells", list, "an array")):
        path = f"$.cells[{i}]"
        _expect(entry, path, dict, "an object")
        for key in ("alt", "param", "m", "n"):
            if key not in entry:
                raise ParseError(f"missing key {key!r}", path=path)
        alt = _expect(entry["alt"], f"{path}.alt", str, "a string")
        param = _expect(entry["param"], f"{path}.param", str, "a string")
        cells[(alt, param)] = _pfn_from_fields(entry, path, f"cell ({alt}, {param})")

    return build(alts, parameters, cells)


def _set_document(softset: PhiSoftSet) -> dict:
    return {
        "universe": list(softset.universe),
        "parameters": [
            {"name": p.name, "importance": {"m": p.importance.m, "n": p.importance.n}}
            for p in softset.parameters
        ],
        "cells": [
            {"alt": alt, "param": name, "m": cell.m, "n": cell.n}
            for alt in softset.universe
            for name, cell in zip(softset.parameter_names, softset.row(alt))
        ],
    }


def _report_document(report: DecisionReport) -> dict:
    doc = {
        "config": {
            "combine": report.config.combine.value,
            "aggregator": report.config.aggregator.value,
            "ranking_order": _ORDER_TOKEN[report.config.ranking_order],
        }
    }
    doc.update(_set_document(report.combined))
    doc["weights"] = list(report.weights)
    doc["measures"] = [
        {
            "alt": r.alternative,
            "apfdv": {"m": r.apfdv.m, "n": r.apfdv.n},
            "es": r.es,
            "sf": r.sf,
            "af": r.af,
            "rank": r.rank,
        }
        for r in report.rows
    ]
    doc["ranking"] = list(report.ranking())
    return doc


def emit_json(obj: PhiSoftSet | DecisionReport) -> bytes:
    """Render a soft set or a decision report as deterministic JSON bytes."""
    if isinstance(obj, PhiSoftSet):
        doc = _set_document(obj)
    elif isinstance(obj, DecisionReport):
        doc = _report_document(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
