"""Canonical JSON document format for hypergraphs.

One format, one byte-exact serialization: keys sorted, one edge per line,
edges sorted ascending inside and lexicographically between edges, trailing
newline.  ``loads(dumps(h)) == h`` and ``dumps(loads(text)) == text`` for any
canonical document.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Union

from .core import MixedHypergraph

FORMAT_VERSION = 1


def to_document(h: MixedHypergraph) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "vertex_count": h.n,
        "c_edges": [list(e) for e in h.c_edges],
        "d_edges": [list(e) for e in h.d_edges],
    }
    if h.labels is not None:
        doc["labels"] = [list(lab) for lab in h.labels]
    return doc


def _expect_edge_lists(doc: dict, key: str) -> list[list[int]]:
    edges = doc[key]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        for e in edges
    ):
        raise ValueError(f"'{key}' must be a list of integer lists")
    return edges


def from_document(doc: Any) -> MixedHypergraph:
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    for key in ("format_version", "vertex_count", "c_edges", "d_edges"):
        if key not in doc:
            raise ValueError(f"document is missing '{key}'")
    if doc["format_version"] != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {doc['format_version']!r}")
    n = doc["vertex_count"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'vertex_count' must be an integer")
    labels = None
    if "labels" in doc and doc["labels"] is not None:
        raw = doc["labels"]
        if not isinstance(raw, list) or not all(
            isinstance(lab, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in lab)
            for lab in raw
        ):
            raise ValueError("'labels' must be a list of integer lists")
        labels = [tuple(lab) for lab in raw]
    return MixedHypergraph(
        n, _expect_edge_lists(doc, "c_edges"), _expect_edge_lists(doc, "d_edges"), labels
    )


def _row_list(rows: list[list[int]]) -> str:
    if not rows:
        return "[]"
    inner = ",\n".join("    [" + ", ".join(map(str, row)) + "]" for row in rows)
    return "[\n" + inner + "\n  ]"


def dumps(h: MixedHypergraph) -> str:
    doc = to_document(h)
    fields = []
    for key in sorted(doc):
        value = doc[key]
        rendered = _row_list(value) if isinstance(value, list) else json.dumps(value)
        fields.append(f'  "{key}": {rendered}')
    return "{\n" + ",\n".join(fields) + "\n}\n"


def loads(text: str) -> MixedHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    return from_document(doc)


def save(h: MixedHypergraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(h), encoding="utf-8")


def load(path: Union[str, Path]) -> MixedHypergraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def sha256_of(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
