"""JSON shapes emitted by the command line interface.

Plain jsonschema dicts, one per payload kind.  They live here rather
than in the CLI so consumers can validate without importing argparse
machinery, and so the test suite can check every emitted payload
against the published contract.
"""

_NONNEG = {"type": "integer", "minimum": 0}

TERM_SCHEMA = {
    "type": "object",
    "properties": {
        "shift": _NONNEG,
        "j": _NONNEG,
        "mult": {"type": "integer"},
    },
    "required": ["shift", "j", "mult"],
    "additionalProperties": False,
}

ELEMENT_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "terms": {"type": "array", "items": TERM_SCHEMA},
    },
    "required": ["p", "terms"],
    "additionalProperties": False,
}

RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "input": {"type": "string"},
        "result": ELEMENT_SCHEMA,
        "rendered": {"type": "string"},
    },
    "required": ["p", "input", "result", "rendered"],
    "additionalProperties": False,
}

LOEWY_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "class": {
            "type": "object",
            "properties": {"shift": _NONNEG, "j": _NONNEG},
            "required": ["shift", "j"],
            "additionalProperties": False,
        },
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "simple": {"type": "boolean"},
        "head": {"type": "array", "items": _NONNEG},
        "socle": {"type": "array", "items": _NONNEG},
    },
    "required": ["p", "class", "name", "dim", "simple", "head", "socle"],
    "additionalProperties": False,
}

RESOLVE_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "input": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "n": _NONNEG,
                    "projectives": {"type": "array", "items": _NONNEG},
                    "syzygy": ELEMENT_SCHEMA,
                },
                "required": ["n", "projectives", "syzygy"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["p", "input", "terms"],
    "additionalProperties": False,
}

GAMMA_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "input": {"type": "string"},
        "value": {"type": "number", "minimum": 0},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "class": {"type": "string"},
                    "mult": {"type": "integer", "minimum": 0},
                    "sine_index": {"type": "integer", "minimum": 1},
                    "value": {"type": "number", "minimum": 0},
                },
                "required": ["class", "mult", "sine_index", "value"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["p", "input", "value", "classes"],
    "additionalProperties": False,
}

UPSILON_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "field": {
            "anyOf": [{"const": "Q"}, {"type": "integer", "minimum": 2}],
        },
        "dim": {"type": "integer", "minimum": 1},
        "radical_dim": _NONNEG,
        "semisimple": {"type": "boolean"},
        "radical_basis": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"anyOf": [{"type": "integer"}, {"type": "string"}]},
            },
        },
        "summand_dims": {
            "anyOf": [
                {"type": "array", "items": {"type": "integer", "minimum": 1}},
                {"type": "null"},
            ],
        },
        "undecided": {"type": "boolean"},
        "trace_discriminant": {"type": "integer"},
    },
    "required": [
        "p",
        "field",
        "dim",
        "radical_dim",
        "semisimple",
        "radical_basis",
        "summand_dims",
        "undecided",
        "trace_discriminant",
    ],
    "additionalProperties": False,
}

QUIVER_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "stable_vertices": {"type": "array", "items": {"type": "string"}},
        "projective_vertices": {"type": "array", "items": {"type": "string"}},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["p", "stable_vertices", "projective_vertices", "edges"],
    "additionalProperties": False,
}

CENSUS_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "label": {"type": "string"},
            "kind": {"enum": ["stable", "projective"]},
            "dim": {"type": "integer", "minimum": 1},
            "head": {"type": "array", "items": _NONNEG},
            "socle": {"type": "array", "items": _NONNEG},
            "shift": _NONNEG,
            "j": _NONNEG,
        },
        "required": ["label", "kind", "dim", "head", "socle", "shift", "j"],
        "additionalProperties": False,
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "seed": {"type": "integer", "minimum": 0},
        "passed": {"type": "boolean"},
        "counts": {
            "type": "object",
            "properties": {
                "total": _NONNEG,
                "failed": _NONNEG,
            },
            "required": ["total", "failed"],
            "additionalProperties": False,
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "check": {"type": "string"},
                    "p": {"type": "integer", "minimum": 3},
                    "inputs": {"type": "object"},
                    "expected": {"type": "string"},
                    "got": {"type": "string"},
                    "passed": {"type": "boolean"},
                },
                "required": ["check", "p", "inputs", "expected", "got", "passed"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["p", "seed", "passed", "counts", "records"],
    "additionalProperties": False,
}
