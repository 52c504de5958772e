"""Versioned JSON documents for tables and projects.

The on-disk grammar is documented in docs/schema.md.  Parsing is strict:
unknown or missing fields are rejected with the JSON path of the offending
entry, and serialize(parse(x)) == x for every valid document produced here.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import SchemaError
from .table import MISSING, Cell, Exact, Interval, PairwiseTable

TABLE_SCHEMA = "cardtable/table@1"
PROJECT_SCHEMA = "cardtable/project@1"


def _require(obj: Mapping, key: str, location: str) -> Any:
    if key not in obj:
        raise SchemaError(f"missing field '{key}'", location)
    return obj[key]


def _check_keys(obj: Mapping, allowed: set, location: str):
    if not isinstance(obj, Mapping):
        raise SchemaError("expected an object", location)
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"unknown field(s) {sorted(unknown)}", location)


def _number(value, location: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected a number, got {value!r}", location)
    return value


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def cell_to_dict(p: int, q: int, cell: Cell) -> dict:
    if isinstance(cell, Exact):
        return {"p": p, "q": q, "kind": "exact", "cards": cell.cards}
    if isinstance(cell, Interval):
        return {"p": p, "q": q, "kind": "interval", "lo": cell.lo, "hi": cell.hi}
    return {"p": p, "q": q, "kind": "missing"}


def table_to_dict(tbl: PairwiseTable) -> dict:
    return {
        "schema": TABLE_SCHEMA,
        "levels": {
            "count": tbl.t,
            "labels": list(tbl.level_labels) if tbl.level_labels else None,
            "coordinates": list(tbl.level_coordinates) if tbl.level_coordinates else None,
        },
        "integer": tbl.integer,
        "cells": [cell_to_dict(p, q, cell) for (p, q), cell in tbl.items()],
    }


def table_from_dict(doc: Mapping, location: str = "") -> PairwiseTable:
    _check_keys(doc, {"schema", "levels", "integer", "cells"}, location)
    schema = _require(doc, "schema", location)
    if schema != TABLE_SCHEMA:
        raise SchemaError(f"unsupported schema '{schema}'", f"{location}/schema")
    levels = _require(doc, "levels", location)
    _check_keys(levels, {"count", "labels", "coordinates"}, f"{location}/levels")
    t = _require(levels, "count", f"{location}/levels")
    if not isinstance(t, int) or t < 2:
        raise SchemaError("level count must be an integer >= 2", f"{location}/levels/count")
    labels = levels.get("labels")
    coordinates = levels.get("coordinates")
    integer = _require(doc, "integer", location)
    if not isinstance(integer, bool):
        raise SchemaError("integer must be a boolean", f"{location}/integer")

    cells: dict[tuple[int, int], Cell] = {}
    raw_cells = _require(doc, "cells", location)
    if not isinstance(raw_cells, list):
        raise SchemaError("cells must be a list", f"{location}/cells")
    for idx, raw in enumerate(raw_cells):
        loc = f"{location}/cells/{idx}"
        kind = _require(raw, "kind", loc)
        if kind == "exact":
            _check_keys(raw, {"p", "q", "kind", "cards"}, loc)
            cell: Cell = Exact(_number(_require(raw, "cards", loc), f"{loc}/cards"))
        elif kind == "interval":
            _check_keys(raw, {"p", "q", "kind", "lo", "hi"}, loc)
            cell = Interval(
                _number(_require(raw, "lo", loc), f"{loc}/lo"),
                _number(_require(raw, "hi", loc), f"{loc}/hi"),
            )
        elif kind == "missing":
            _check_keys(raw, {"p", "q", "kind"}, loc)
            cell = MISSING
        else:
            raise SchemaError(f"unknown cell kind '{kind}'", f"{loc}/kind")
        p, q = _require(raw, "p", loc), _require(raw, "q", loc)
        if not (isinstance(p, int) and isinstance(q, int) and 1 <= p < q <= t):
            raise SchemaError(f"({p}, {q}) is not an upper-triangular pair", loc)
        if (p, q) in cells:
            raise SchemaError(f"duplicate cell ({p}, {q})", loc)
        cells[(p, q)] = cell
    try:
        return PairwiseTable.from_cells(
            t,
            cells,
            level_labels=tuple(labels) if labels else None,
            level_coordinates=tuple(coordinates) if coordinates else None,
            integer=integer,
        )
    except ValueError as exc:
        raise SchemaError(str(exc), location) from exc


def dumps(doc: Mapping) -> str:
    """Canonical text rendering used everywhere a document is written."""
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def save_table(tbl: PairwiseTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(table_to_dict(tbl)))


def load_table(path) -> PairwiseTable:
    with open(path, encoding="utf-8") as fh:
        return table_from_dict(json.load(fh))
