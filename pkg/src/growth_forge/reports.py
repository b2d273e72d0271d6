"""CSV and JSON writers for growth tables, certificates and summaries.

Growth tables have columns ``length,count`` (count = dim V^n).  JSON
documents carry ``"schema": "growth-forge/v1"``.
"""
from __future__ import annotations

import csv
import io
import json

SCHEMA = "growth-forge/v1"


def growth_csv(rows) -> str:
    """``rows`` is a list of {"length", "count"} dicts."""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["length", "count"], lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({"length": r["length"], "count": r["count"]})
    return buf.getvalue()


def growth_json(rows, summary: dict | None = None, kind: str = "growth") -> str:
    doc = {"schema": SCHEMA, "kind": kind,
           "series": [{"l": r["length"], "p": r["count"]} for r in rows]}
    if summary:
        doc["summary"] = summary
    return dumps(doc)


def read_growth(text: str) -> list:
    """Inverse of both writers: [(length, count), ...]."""
    s = text.lstrip()
    if s.startswith("{"):
        doc = json.loads(s)
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {doc.get('schema')!r}")
        return [(int(r["l"]), int(r["p"])) for r in doc["series"]]
    return [(int(r["length"]), int(r["count"])) for r in csv.DictReader(io.StringIO(text))]


def document(kind: str, **fields) -> dict:
    return {"schema": SCHEMA, "kind": kind, **fields}


def dumps(doc) -> str:
    # sorted keys keep reports byte-identical across runs
    return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"


def write_text(text: str, path=None, stream=None):
    if path is None:
        stream.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
