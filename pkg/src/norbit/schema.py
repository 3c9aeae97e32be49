"""JSON Schemas for the command-line output. Kept as plain dicts so tests
can validate against them with any Draft 2020-12 validator."""

FRACTION = {"type": "string", "pattern": r"^-?\d+(/2)?$"}

ORBIT = {
    "type": "object",
    "required": ["type", "rank", "partition", "label"],
    "properties": {
        "type": {"enum": ["A", "B", "C", "D"]},
        "rank": {"type": "integer", "minimum": 0},
        "partition": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "label": {"enum": [None, "I", "II"]},
    },
    "additionalProperties": False,
}

INFCHAR = {
    "type": "object",
    "required": ["type", "rank", "lambda", "entries", "rule", "d_sign_parity"],
    "properties": {
        "type": {"enum": ["A", "B", "C", "D"]},
        "rank": {"type": "integer", "minimum": 0},
        "lambda": {"type": "array", "items": FRACTION},
        "entries": {"type": "array", "items": FRACTION},
        "rule": {"enum": ["even-dual", "recipe", "triangular-levi", "rho"]},
        "d_sign_parity": {"type": ["boolean", "null"]},
        "trace": {"type": "object"},
    },
}

REPORT = {
    "type": "object",
    "required": ["case", "status", "witness"],
    "properties": {
        "case": {"type": "string"},
        "status": {"enum": ["pass", "fail", "inconclusive", "info"]},
    },
}

ORBIT_LIST = {"type": "array", "items": ORBIT}

HASSE = {
    "type": "object",
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": ORBIT_LIST,
        "edges": {
            "type": "array",
            "items": {"type": "array", "prefixItems": [ORBIT, ORBIT], "minItems": 2, "maxItems": 2},
        },
    },
}

BRANCH = {
    "type": "object",
    "required": ["highest_weight", "levi", "components"],
    "properties": {
        "highest_weight": {"type": "array", "items": FRACTION},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["weight", "multiplicity"],
                "properties": {
                    "weight": {"type": "array", "items": FRACTION},
                    "multiplicity": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}
