"""JSON Schemas for every ``--json`` document the command line emits."""

SCALAR = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?[0-9]+/[0-9]+$"},
        {"type": "string", "enum": ["-inf", "inf"]},
    ]
}

PAIR = {"type": "array", "items": SCALAR, "minItems": 2, "maxItems": 2}

VECTOR = {"type": "array", "items": SCALAR, "minItems": 1}

MATRIX = {
    "type": "object",
    "required": ["rows", "cols", "entries"],
    "properties": {
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "entries": {"type": "array", "items": VECTOR, "minItems": 1},
    },
}

ERROR = {
    "type": "object",
    "required": ["error", "exit_code"],
    "properties": {"error": {"type": "string"}, "exit_code": {"type": "integer", "minimum": 2}},
}

SYNTH = {
    "type": "object",
    "required": ["A", "B", "predicted_components"],
    "properties": {
        "A": {"type": "string"},
        "B": {"type": "string"},
        "predicted_components": {"type": "array", "items": PAIR},
    },
}

CHECK = {
    "type": "object",
    "required": ["lambda", "status", "method"],
    "properties": {
        "lambda": SCALAR,
        "status": {"enum": ["solvable", "infeasible"]},
        "method": {"enum": ["dominance", "alternating", "oracle"]},
        "reason": {"type": "string"},
        "iterations": {"type": "integer"},
        "witness": VECTOR,
        "common_value": VECTOR,
    },
}

SPECTRUM = {
    "type": "object",
    "required": ["bounds", "components", "heuristic"],
    "properties": {
        "bounds": {"oneOf": [PAIR, {"type": "null"}]},
        "components": {"type": "array", "items": PAIR},
        "heuristic": {"type": "boolean"},
    },
}

VERIFY = {
    "type": "object",
    "required": ["intervals", "passed", "checks"],
    "properties": {
        "intervals": {"type": "array", "items": PAIR},
        "passed": {"type": "boolean"},
        "components": {"type": "array", "items": PAIR},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed"],
                "properties": {
                    "name": {"type": "string"},
                    "lambda": SCALAR,
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "witness_hash": {"type": "string"},
                },
            },
        },
    },
}

SCHEDULE = {
    "type": "object",
    "required": ["components", "schedules"],
    "properties": {
        "components": {"type": "array", "items": PAIR},
        "schedules": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lambda", "starts_x", "starts_y", "completion"],
                "properties": {
                    "lambda": SCALAR,
                    "component": {"type": "integer"},
                    "starts_x": VECTOR,
                    "starts_y": VECTOR,
                    "completion": VECTOR,
                },
            },
        },
    },
}

BY_COMMAND = {
    "synth": SYNTH,
    "check": CHECK,
    "spectrum": SPECTRUM,
    "verify": VERIFY,
    "schedule": SCHEDULE,
}
