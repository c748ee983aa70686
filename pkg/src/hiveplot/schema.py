"""Layout JSON document schema and semantic validation.

This document is the contract between the layout engine and the viewer:
axis angles and per-vertex (axis, index, r) describe the combinatorics,
edge paths carry ready-to-draw cubic control polygons in [-1, 1] square
coordinates.
"""

from __future__ import annotations

import jsonschema

LAYOUT_SCHEMA = {
    "type": "object",
    "required": ["meta", "axes", "vertices", "dummies", "edges"],
    "properties": {
        "meta": {
            "type": "object",
            "required": ["k", "g", "seed", "crossings"],
            "properties": {
                "k": {"type": "integer", "minimum": 1},
                "g": {"type": "integer", "minimum": 1},
                "seed": {"type": "integer"},
                "crossings": {
                    "type": "object",
                    "required": ["inter", "intra"],
                    "properties": {
                        "inter": {"type": ["integer", "null"], "minimum": 0},
                        "intra": {"type": ["integer", "null"], "minimum": 0},
                    },
                },
            },
        },
        "axes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "order", "angle"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "order": {"type": "integer", "minimum": 0},
                    "angle": {"type": "number"},
                },
            },
        },
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "label", "axis", "index", "r", "degree", "interAxisDegree"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "label": {"type": "string"},
                    "axis": {"type": "integer", "minimum": 0},
                    "index": {"type": "integer", "minimum": 0},
                    "r": {"type": "number", "minimum": 0},
                    "degree": {"type": "integer", "minimum": 0},
                    "interAxisDegree": {"type": "integer", "minimum": 0},
                },
            },
        },
        "dummies": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "axis", "index", "edge"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "axis": {"type": "integer", "minimum": 0},
                    "index": {"type": "integer", "minimum": 0},
                    "edge": {
                        "type": "array",
                        "items": {"type": "integer"},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "target", "class", "path"],
                "properties": {
                    "source": {"type": "integer", "minimum": 0},
                    "target": {"type": "integer", "minimum": 0},
                    "class": {"enum": ["proper", "long", "intra"]},
                    "path": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "items": {"type": "number", "minimum": -1, "maximum": 1},
                            "minItems": 2,
                            "maxItems": 2,
                        },
                        "minItems": 4,
                    },
                },
            },
        },
    },
}


def validate_layout_doc(doc) -> list[str]:
    """Schema check plus cross-reference consistency; returns all problems."""
    validator = jsonschema.Draft202012Validator(LAYOUT_SCHEMA)
    problems = [
        f"schema: {err.json_path}: {err.message}" for err in validator.iter_errors(doc)
    ]
    if problems:
        return problems

    k = doc["meta"]["k"]
    axis_ids = {a["id"] for a in doc["axes"]}
    if axis_ids != set(range(k)):
        problems.append("axes: ids must be exactly 0..k-1")
    if {a["order"] for a in doc["axes"]} != set(range(k)):
        problems.append("axes: orders must be a permutation of 0..k-1")

    vertex_ids = {v["id"] for v in doc["vertices"]}
    dummy_ids = {d["id"] for d in doc["dummies"]}
    if vertex_ids & dummy_ids:
        problems.append("vertex and dummy ids overlap")
    for v in doc["vertices"]:
        if v["axis"] not in axis_ids:
            problems.append(f"vertex {v['id']}: unknown axis {v['axis']}")
    for d in doc["dummies"]:
        if d["axis"] not in axis_ids:
            problems.append(f"dummy {d['id']}: unknown axis {d['axis']}")
        if not set(d["edge"]).issubset(vertex_ids):
            problems.append(f"dummy {d['id']}: edge endpoints unknown")
    for e in doc["edges"]:
        if e["source"] not in vertex_ids or e["target"] not in vertex_ids:
            problems.append(f"edge {e['source']}-{e['target']}: unknown endpoint")
        if (len(e["path"]) - 1) % 3 != 0:
            problems.append(
                f"edge {e['source']}-{e['target']}: path is not a cubic chain"
            )
    return problems
