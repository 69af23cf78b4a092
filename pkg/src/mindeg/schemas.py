"""JSON Schemas for the CLI reports."""

RATIONAL = {
    "type": "object",
    "properties": {
        "num": {"type": "string", "pattern": "^-?[0-9]+$"},
        "den": {"type": "string", "pattern": "^[1-9][0-9]*$"},
    },
    "required": ["num", "den"],
    "additionalProperties": False,
}

_NULLABLE_RATIONAL = {"anyOf": [RATIONAL, {"type": "null"}]}

EVAL = {
    "type": "object",
    "properties": {
        "target": {"enum": ["thm1", "cor1", "cor2", "cor3", "thm2", "thm3", "remark", "general"]},
        "params": {"type": "object"},
        "value": RATIONAL,
        "approx": {"type": "number"},
    },
    "required": ["target", "params", "value", "approx"],
    "additionalProperties": False,
}

SIMULATE = {
    "type": "object",
    "properties": {
        "ambient": {"type": "string"},
        "delta": {"type": "integer", "minimum": 1},
        "target": {"type": "string"},
        "mean": {"type": "number"},
        "stderr": {"type": "number", "minimum": 0},
        "trials": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer", "minimum": 0, "maximum": 2**64 - 1},
        "reference": _NULLABLE_RATIONAL,
        "reference_approx": {"type": ["number", "null"]},
        "z": {"type": ["number", "null"]},
    },
    "required": ["ambient", "delta", "target", "mean", "stderr", "trials", "seed", "reference", "z"],
    "additionalProperties": False,
}

DISTRIBUTION = {
    "type": "object",
    "properties": {
        "edge_total": {"type": "integer"},
        "h": {"type": "integer"},
        "delta_big": {"type": "integer"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"k": {"type": "integer"}, "value": RATIONAL, "approx": {"type": "number"}},
                "required": ["k", "value", "approx"],
                "additionalProperties": False,
            },
        },
        "total": RATIONAL,
        "total_approx": {"type": "number"},
        "argmax": {"type": "integer"},
    },
    "required": ["rows", "total", "argmax"],
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "properties": {
        "suite": {"enum": ["small", "full"]},
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "criterion": {"type": "string"},
                    "name": {"type": "string"},
                    "expected": {"type": "string"},
                    "actual": {"type": "string"},
                    "within_budget": {"type": "boolean"},
                    "passed": {"type": "boolean"},
                },
                "required": ["criterion", "name", "expected", "actual", "passed"],
            },
        },
    },
    "required": ["suite", "passed", "checks"],
}
