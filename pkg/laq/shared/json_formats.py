"""Reference JSON formats for model files and command reports.

This module documents the canonical shapes read and written by the CLI. Keep
these in sync with:
- laq/cli/model_io.py (reader for MODEL documents)
- laq/cli/report.py (writer and reader for REPORT documents)

Notes:
- Rationals are integers or "numerator/denominator" strings; floats are refused.
- Matrices are row-major lists of rows. A map V -> W has dim W rows and dim V
  columns; the multiplication map over (g, h) takes dim Ω_g + dim Ω_h columns,
  Ω_g first. Zero-dimensional sides are written as [].
- Bracket entries [i, j, k, c] say that the e_k coordinate of [e_i, e_j] is c,
  with 1-based indices; [e_j, e_i] is filled in by antisymmetry.
- Groupoid arrows run src -> tgt and (g, h) composes iff src(g) = tgt(h).
"""

from typing import Any, Dict


# -----------------------------
# Shared fragments
# -----------------------------

RATIONAL_JSON_SCHEMA: Dict[str, Any] = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+\s*(/\s*[+-]?\d*[1-9]\d*\s*)?$"},
    ]
}

MATRIX_JSON_SCHEMA: Dict[str, Any] = {
    "type": "array",
    "items": {"type": "array", "items": RATIONAL_JSON_SCHEMA},
}

LIE_ALGEBRA_JSON_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "oneOf": [
        {
            "required": ["dim"],
            "properties": {
                "dim": {"type": "integer", "minimum": 0},
                "brackets": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "minItems": 4,
                        "maxItems": 4,
                        "prefixItems": [
                            {"type": "integer", "minimum": 1},
                            {"type": "integer", "minimum": 1},
                            {"type": "integer", "minimum": 1},
                            RATIONAL_JSON_SCHEMA,
                        ],
                    },
                },
            },
        },
        {
            "required": ["catalog"],
            "properties": {
                "catalog": {
                    "type": "string",
                    "description": "sl2 | heisenberg | two_dim_nonabelian | abelian<n>",
                }
            },
        },
    ],
}

BUNDLE_JSON_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "description": "Either {point: algebra} or the constant shorthand {points, algebra}.",
    "oneOf": [
        {
            "required": ["points", "algebra"],
            "properties": {
                "points": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                "algebra": LIE_ALGEBRA_JSON_SCHEMA,
            },
        },
        {"additionalProperties": LIE_ALGEBRA_JSON_SCHEMA},
    ],
}

GROUPOID_JSON_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "oneOf": [
        {
            "required": ["catalog"],
            "properties": {
                "catalog": {"type": "string", "enum": ["cyclic", "symmetric", "pair", "identity"]},
                "order": {"type": "integer", "minimum": 1},
                "points": {"type": "array", "items": {"type": "string"}},
            },
        },
        {
            "required": ["objects", "arrows", "mult", "units", "inverses"],
            "properties": {
                "objects": {"type": "array", "items": {"type": "string"}},
                "arrows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["id", "src", "tgt"],
                        "properties": {
                            "id": {"type": "string"},
                            "src": {"type": "string"},
                            "tgt": {"type": "string"},
                        },
                    },
                },
                "mult": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3},
                },
                "units": {"type": "object", "additionalProperties": {"type": "string"}},
                "inverses": {"type": "object", "additionalProperties": {"type": "string"}},
            },
        },
    ],
}


# -----------------------------
# Model documents (laq-v1)
# -----------------------------

MODEL_JSON_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "laq-v1 model document",
    "type": "object",
    "required": ["format"],
    "properties": {
        "format": {"const": "laq-v1"},
        "builder": {
            "type": "string",
            "enum": ["trivial_groupoid", "trivial_algebroid", "equivariant", "vacant", "pair_zero", "product"],
            "description": (
                "Builder fields sit at the top level: trivial_groupoid {groupoid}; "
                "trivial_algebroid {algebroid}; pair_zero {points}; "
                "equivariant {algebroid, group, action: {moves?, lifts}}; "
                "vacant {groupoid, algebroid, lifts}; product {factors: [doc, doc]}. "
                "Missing lifts between fibers of equal dimension default to the identity; "
                "missing equivariant moves default to the trivial action on points."
            ),
        },
        "explicit": {
            "type": "object",
            "description": "Groupoid tables plus algebroid and omega.",
            "properties": {
                "algebroid": BUNDLE_JSON_SCHEMA,
                "omega": {
                    "type": "object",
                    "required": ["source_maps", "target_maps", "mult_maps", "unit_maps", "inverse_maps"],
                    "properties": {
                        "fibers": BUNDLE_JSON_SCHEMA,
                        "source_maps": {"type": "object", "additionalProperties": MATRIX_JSON_SCHEMA},
                        "target_maps": {"type": "object", "additionalProperties": MATRIX_JSON_SCHEMA},
                        "mult_maps": {
                            "type": "object",
                            "description": "Keyed by 'g,h'.",
                            "additionalProperties": MATRIX_JSON_SCHEMA,
                        },
                        "unit_maps": {"type": "object", "additionalProperties": MATRIX_JSON_SCHEMA},
                        "inverse_maps": {"type": "object", "additionalProperties": MATRIX_JSON_SCHEMA},
                    },
                },
            },
        },
    },
    "oneOf": [{"required": ["builder"]}, {"required": ["explicit"]}],
}


# Builder example: ℤ/2 acting on ℚ² by swapping the coordinates.
MODEL_EXAMPLE: Dict[str, Any] = {
    "format": "laq-v1",
    "builder": "equivariant",
    "algebroid": {"points": ["pt"], "algebra": {"dim": 2, "brackets": []}},
    "group": {"catalog": "cyclic", "order": 2},
    "action": {"lifts": {"1": {"pt": [[0, 1], [1, 0]]}}},
}


# Explicit example: the abelian ℚ¹ over a point, with Ω = A.
MODEL_EXPLICIT_EXAMPLE: Dict[str, Any] = {
    "format": "laq-v1",
    "explicit": {
        "objects": ["x"],
        "arrows": [{"id": "1x", "src": "x", "tgt": "x"}],
        "mult": [["1x", "1x", "1x"]],
        "units": {"x": "1x"},
        "inverses": {"1x": "1x"},
        "algebroid": {"x": {"dim": 1, "brackets": []}},
        "omega": {
            "fibers": {"1x": {"dim": 1, "brackets": []}},
            "source_maps": {"1x": [[1]]},
            "target_maps": {"1x": [[1]]},
            "mult_maps": {"1x,1x": [[0, 1]]},
            "unit_maps": {"x": [[1]]},
            "inverse_maps": {"1x": [[1]]},
        },
    },
}


# -----------------------------
# Reports
# -----------------------------

REPORT_JSON_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "laq command report",
    "type": "object",
    "required": ["command", "arguments", "checks", "tables", "messages", "timing_seconds", "exit_status"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string", "enum": ["validate", "cohomology", "spectral", "nerve", "selftest"]},
        "arguments": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "ok", "failure"],
                "properties": {
                    "name": {"type": "string"},
                    "ok": {"type": "boolean"},
                    "failure": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "required": ["kind", "check", "message", "witness"],
                                "properties": {
                                    "kind": {"type": "string", "description": "e.g. JacobiFailure"},
                                    "check": {"type": "string"},
                                    "message": {"type": "string"},
                                    "witness": {"type": "object"},
                                },
                            },
                        ]
                    },
                },
            },
        },
        "tables": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["columns", "rows"],
                "properties": {
                    "columns": {"type": "array", "items": {"type": "string"}},
                    "rows": {
                        "type": "array",
                        "description": "null marks an entry outside the certified region.",
                        "items": {"type": "array"},
                    },
                },
            },
        },
        "messages": {"type": "array", "items": {"type": "string"}},
        "timing_seconds": {"type": "number", "minimum": 0},
        "exit_status": {"type": "integer", "enum": [0, 1, 2]},
    },
}


REPORT_EXAMPLE: Dict[str, Any] = {
    "command": "cohomology",
    "arguments": {"file": "tests/fixtures/trivial_abelian2.laq", "max_degree": 3, "window": [4, 4]},
    "checks": [],
    "tables": {
        "total_cohomology": {"columns": ["n", "dim H^n"], "rows": [[0, 1], [1, 2], [2, 1], [3, 0]]},
    },
    "messages": ["window: 4,4"],
    "timing_seconds": 0.412,
    "exit_status": 0,
}
