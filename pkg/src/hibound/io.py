"""Hypergraph text format and machine-readable report output.

File format::

    # comment
    k n
    v1 v2 ... vk      (one edge per line, 0-based unless one_based=True)
"""

from __future__ import annotations

import csv
import io
import json

from .bounds import BOUND_NAMES, BoundReport, NotApplicable
from .errors import (
    DuplicateEdgeLine,
    EdgeArity,
    IndexOutOfRange,
    InvalidParams,
    MalformedHeader,
)
from .hypergraph import Hypergraph

CSV_COLUMNS = ("n", "m", "k", *BOUND_NAMES, "alpha")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "k", "bounds", "alpha", "alpha_exhausted", "warnings"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 2},
        "bounds": {
            "type": "object",
            "required": list(BOUND_NAMES),
            "additionalProperties": False,
            "properties": {
                name: {
                    "oneOf": [
                        {"type": "integer", "minimum": 0},
                        {
                            "type": "object",
                            "required": ["na"],
                            "additionalProperties": False,
                            "properties": {"na": {"type": "string", "minLength": 1}},
                        },
                    ]
                }
                for name in BOUND_NAMES
            },
        },
        "alpha": {"type": ["integer", "null"]},
        "alpha_exhausted": {"type": "boolean"},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}


def parse_hypergraph(text: str, one_based: bool = False) -> Hypergraph:
    header = None
    seen: dict[frozenset, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise MalformedHeader("header must be two integers 'k n'", lineno)
            try:
                k, n = int(fields[0]), int(fields[1])
            except ValueError:
                raise MalformedHeader("header must be two integers 'k n'", lineno) from None
            if k < 2 or n < 1:
                raise MalformedHeader(f"need k >= 2 and n >= 1, got k={k}, n={n}", lineno)
            header = (k, n)
            continue
        k, n = header
        try:
            verts = [int(x) - (1 if one_based else 0) for x in fields]
        except ValueError:
            raise EdgeArity(f"non-integer vertex in {line!r}", lineno) from None
        if len(verts) != k or len(set(verts)) != k:
            raise EdgeArity(f"expected {k} distinct vertices, got {line!r}", lineno)
        for v in verts:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"vertex {v + (1 if one_based else 0)} out of range", lineno)
        key = frozenset(verts)
        if key in seen:
            raise DuplicateEdgeLine(f"edge repeats line {seen[key]}", lineno)
        seen[key] = lineno
        edges.append(tuple(verts))
    if header is None:
        raise MalformedHeader("missing header line", 0)
    k, n = header
    return Hypergraph(n, k, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.k} {h.n}"]
    lines += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str, one_based: bool = False) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read(), one_based=one_based)


def write_hypergraph(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_hypergraph(h))


def _bound_json(v):
    if isinstance(v, NotApplicable):
        return {"na": v.reason}
    return v


def report_to_dict(r: BoundReport) -> dict:
    out = {
        "n": r.n,
        "m": r.m,
        "k": r.k,
        "bounds": {name: _bound_json(r.bounds[name]) for name in BOUND_NAMES},
        "alpha": r.alpha,
        "alpha_exhausted": r.alpha_exhausted,
        "warnings": list(r.warnings),
    }
    if r.witness is not None:
        out["witness"] = list(r.witness)
        out["nodes_explored"] = r.nodes_explored
    return out


def report_to_json(r: BoundReport) -> str:
    return json.dumps(report_to_dict(r), indent=2) + "\n"


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, NotApplicable):
        return "na"
    return str(v)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.n, r.m, r.k, *(_csv_cell(r.bounds[b]) for b in BOUND_NAMES), _csv_cell(r.alpha)])
    return buf.getvalue()


def report_to_table(r: BoundReport) -> str:
    rows = [("n", r.n), ("m", r.m), ("k", r.k)]
    rows += [(name, r.bounds[name]) for name in BOUND_NAMES]
    if r.alpha is not None:
        tag = "" if r.alpha_exhausted else " (not exhausted)"
        rows.append(("alpha", f"{r.alpha}{tag}"))
    width = max(len(name) for name, _ in rows)
    lines = [f"{name.ljust(width)}  {value}" for name, value in rows]
    lines += [f"warning: {w}" for w in r.warnings]
    return "\n".join(lines) + "\n"


def format_report(r: BoundReport, fmt: str) -> str:
    if fmt == "json":
        return report_to_json(r)
    if fmt == "csv":
        return reports_to_csv([r])
    if fmt == "table":
        return report_to_table(r)
    raise InvalidParams(f"unknown format {fmt!r}")
