"""JSON schema of the reports written by ``polarinv --format json``.

Keys other than ``family``, ``hypothesis`` and ``warnings`` appear only for
the subcommands that produce them.
"""

_INT = {"type": "integer"}
_STR = {"type": "string"}
_INTS = {"type": "array", "items": _INT}

_ATYPICAL = {
    "type": "object",
    "required": ["min_poly", "degree", "gamma"],
    "properties": {
        "min_poly": _STR,
        "degree": {"type": "integer", "minimum": 1},
        "gamma": _INT,
        "value_sum": _INT,
        "defect": _INT,
    },
}

_HYPERPLANE = {
    "type": "object",
    "required": ["coefficients", "constant"],
    "properties": {"coefficients": _INTS, "constant": _INT},
}

_LEVEL_CHOICE = {
    "type": "object",
    "required": ["level", "attempt", "matrix", "hyperplane"],
    "properties": {
        "level": _INT,
        "attempt": _INT,
        "matrix": {"type": "array", "items": _INTS},
        "hyperplane": {"oneOf": [{"type": "null"}, _HYPERPLANE]},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["family", "hypothesis", "warnings"],
    "additionalProperties": False,
    "properties": {
        "family": {
            "type": "object",
            "required": ["F", "parameter", "space", "n", "degree", "mode", "constant_family"],
            "properties": {
                "F": _STR,
                "parameter": _STR,
                "space": {"type": "array", "items": _STR, "minItems": 1},
                "n": {"type": "integer", "minimum": 1},
                "degree": {"type": "integer", "minimum": 1},
                "mode": {"enum": ["fiber", "general"]},
                "constant_family": {"type": "boolean"},
            },
        },
        "hypothesis": {
            "type": "object",
            "required": ["pass", "diagnostics"],
            "properties": {
                "pass": {"type": "boolean"},
                "smooth": {"type": "boolean"},
                "diagnostics": {"type": "array", "items": _STR},
                "singular_values": {"type": "array", "items": _STR},
            },
        },
        "generic_choice": {
            "type": "object",
            "required": ["seed", "matrix", "hyperplanes"],
            "properties": {
                "seed": _INT,
                "matrix": {"type": "array", "items": _INTS},
                "hyperplanes": {"type": "array", "items": _HYPERPLANE},
                "chains": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["chain", "levels"],
                        "properties": {"chain": _INT, "levels": {"type": "array", "items": _LEVEL_CHOICE}},
                    },
                },
            },
        },
        "atypical_values": {"type": "array", "items": _STR},
        "singular_values": {"type": "array", "items": _STR},
        "lambda_profile": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["level", "defects"],
                "properties": {
                    "level": _INT,
                    "defects": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["min_poly", "lambda"],
                            "properties": {"min_poly": _STR, "lambda": _INT},
                        },
                    },
                },
            },
        },
        "gamma_profile": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["level", "generic", "atypical"],
                "properties": {
                    "level": _INT,
                    "generic": {"type": "integer", "minimum": 0},
                    "atypical": {"type": "array", "items": _ATYPICAL},
                },
            },
        },
        "gamma_at": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "gamma", "lambda"],
                "properties": {"c": _STR, "gamma": _INTS, "lambda": _INTS},
            },
        },
        "fibers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "mu", "gamma", "chi", "cells"],
                "properties": {
                    "c": _STR,
                    "mu": {"type": "integer", "minimum": 0},
                    "gamma": _INTS,
                    "chi": _INT,
                    "cells": _INTS,
                    "singular": {"type": "boolean"},
                },
            },
        },
        "verdicts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "t_equisingular_at_infinity", "defects", "implied"],
                "properties": {
                    "c": _STR,
                    "t_equisingular_at_infinity": {"type": "boolean"},
                    "defects": _INTS,
                    "implied": {"type": "array", "items": _STR},
                },
            },
        },
        "euler_jumps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "jump"],
                "properties": {"c": _STR, "jump": _INT},
            },
        },
        "warnings": {"type": "array", "items": _STR},
    },
}

ERROR_SCHEMA = {
    "type": "object",
    "required": ["error"],
    "additionalProperties": False,
    "properties": {
        "error": {
            "type": "object",
            "required": ["type", "message", "exit_code"],
            "properties": {"type": _STR, "message": _STR, "exit_code": {"enum": [1, 2, 3, 4]}},
        }
    },
}
