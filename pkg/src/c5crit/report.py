"""Versioned JSON reports emitted by the command line tool."""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, Optional

from . import __version__
from .formats import graph6_encode

SCHEMA_ID = "c5crit.report/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "type": "object",
    "required": ["schema", "command", "input_digest", "result", "tool_version"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "command": {
            "type": "object",
            "required": ["name", "args"],
            "properties": {
                "name": {"type": "string"},
                "args": {"type": "object"},
            },
        },
        "input_digest": {"type": ["string", "null"], "pattern": "^[0-9a-f]{64}$"},
        "result": {"type": ["object", "array"]},
        "timing": {
            "type": "object",
            "required": ["seconds"],
            "properties": {"seconds": {"type": "number", "minimum": 0}},
        },
        "tool_version": {"type": "string"},
    },
}

ERROR_SCHEMA = {
    "type": "object",
    "required": ["schema", "error"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "error": {
            "type": "object",
            "required": ["kind", "message"],
            "properties": {"kind": {"type": "string"}, "message": {"type": "string"}},
        },
    },
}


def input_digest(graphs: Iterable) -> Optional[str]:
    """sha256 over the graph6 lines of the inputs, or ``None`` without input."""
    graphs = list(graphs)
    if not graphs:
        return None
    h = hashlib.sha256()
    for G in graphs:
        h.update(graph6_encode(G).encode("ascii") + b"\n")
    return h.hexdigest()


def make_report(command: str, args: dict, graphs, result, seconds: Optional[float]) -> dict:
    rep = {
        "schema": SCHEMA_ID,
        "command": {"name": command, "args": args},
        "input_digest": input_digest(graphs),
        "result": result,
        "tool_version": __version__,
    }
    if seconds is not None:
        rep["timing"] = {"seconds": round(seconds, 6)}
    return rep


def error_report(kind: str, message: str) -> dict:
    return {"schema": SCHEMA_ID, "error": {"kind": kind, "message": message}}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
