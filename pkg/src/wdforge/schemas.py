"""JSON Schemas (draft 2020-12) for every CLI output document."""

from __future__ import annotations

_element = {"anyOf": [{"type": "string"}, {"type": "integer"}, {"type": "array", "items": {"type": ["string", "integer"]}}]}
_matrix = {"type": "array", "items": {"type": "array", "items": _element}}
_rational = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

_field = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["Q", "Qext", "GF"]}},
}

_wd = {
    "type": "object",
    "required": ["q", "E", "d", "frob", "n"],
    "properties": {"q": {"type": "integer"}, "E": _field, "d": {"type": "integer"}, "frob": _matrix, "n": _matrix},
}

_segment = {
    "type": "object",
    "required": ["c", "n"],
    "properties": {"c": _element, "n": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}
_segments = {"type": "array", "items": _segment}


def _doc(required, properties):
    props = dict(properties)
    props["wdforge_schema"] = {"const": 1}
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": list(required) + ["wdforge_schema"],
        "properties": props,
        "additionalProperties": False,
    }


ERROR = _doc(
    ["error"],
    {
        "error": {
            "type": "object",
            "required": ["error", "message"],
            "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
        }
    },
)

SCHEMAS = {
    "validate": _doc(
        ["valid", "kind", "violations"],
        {
            "valid": {"type": "boolean"},
            "kind": {"type": ["string", "null"]},
            "violations": {"type": "array", "items": {"type": "string"}},
        },
    ),
    "wd": _doc(["tau", "wd"], {"tau": {"type": "integer"}, "wd": _wd}),
    "tauindep": _doc(
        ["tau_independent", "pairs", "segments"],
        {
            "tau_independent": {"type": "boolean"},
            "pairs": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["i", "j", "isomorphic"],
                    "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, "isomorphic": {"type": "boolean"}},
                },
            },
            "segments": {"type": "array", "items": _segments},
        },
    ),
    "fss": _doc(["wd"], {"wd": _wd}),
    "ss": _doc(["wd"], {"wd": _wd}),
    "segments": _doc(["segments"], {"segments": _segments}),
    "iso": _doc(["isomorphic", "strict"], {"isomorphic": {"type": "boolean"}, "strict": {"type": "boolean"}}),
    "generic": _doc(["generic"], {"generic": {"type": "boolean"}}),
    "linv": _doc(
        ["monodromy", "L", "alpha", "j0"],
        {
            "monodromy": {
                "type": "object",
                "required": ["n_nonzero", "j0", "fil_differs_from_image", "monodromy_module"],
            },
            "L": _element,
            "alpha": _element,
            "j0": {"type": "integer"},
        },
    ),
    "wa": _doc(
        ["t_N", "t_H", "subobjects", "weakly_admissible"],
        {
            "t_N": _rational,
            "t_H": _rational,
            "weakly_admissible": {"type": "boolean"},
            "subobjects": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["line", "eigenvalue", "t_N", "t_H", "ok"],
                    "properties": {"t_N": _rational, "t_H": _rational, "ok": {"type": "boolean"}},
                },
            },
        },
    ),
    "htweights": _doc(
        ["weights", "weight_zero_type"],
        {
            "weights": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "weight_zero_type": {"type": ["boolean", "null"]},
        },
    ),
    "monodromy": _doc(
        ["dominates", "ranks_first", "ranks_second"],
        {
            "dominates": {"type": "boolean"},
            "ranks_first": {"type": "array", "items": {"type": "integer"}},
            "ranks_second": {"type": "array", "items": {"type": "integer"}},
        },
    ),
    "compat": _doc(
        ["level", "verdict", "ss_match", "fss_match", "monodromy_ok", "galois_segments", "automorphic_segments", "reason"],
        {
            "level": {"enum": ["ss", "fss", "monodromy"]},
            "verdict": {"type": "boolean"},
            "ss_match": {"type": "boolean"},
            "fss_match": {"type": "boolean"},
            "monodromy_ok": {"type": "boolean"},
            "galois_segments": _segments,
            "automorphic_segments": _segments,
            "reason": {
                "enum": [
                    "match",
                    "crystalline vs special: contradiction locus of the main theorem",
                    "semisimplifications differ",
                    "galois monodromy exceeds automorphic monodromy",
                    "frobenius-semisimple classes differ",
                ]
            },
        },
    ),
    "enormous": _doc(
        [
            "order",
            "absolutely_irreducible",
            "no_l_power_quotient",
            "h0_zero",
            "h1_zero",
            "simple_submodule_condition",
            "enormous",
            "witnesses",
            "cohomology",
            "splitting_field",
        ],
        {
            "order": {"type": "integer", "minimum": 1},
            "absolutely_irreducible": {"type": "boolean"},
            "no_l_power_quotient": {"type": "boolean"},
            "h0_zero": {"type": "boolean"},
            "h1_zero": {"type": "boolean"},
            "simple_submodule_condition": {"type": "boolean"},
            "enormous": {"type": "boolean"},
            "witnesses": {
                "type": "object",
                "required": ["fixed_vectors", "l_power_quotient_order", "failing_submodule", "simple_submodules"],
            },
            "cohomology": {
                "type": "object",
                "required": ["h0", "h1", "methods_agree"],
                "properties": {"methods_agree": {"const": True}},
            },
            "splitting_field": _field,
        },
    ),
    "decgen": _doc(
        ["p", "l", "decomposed_generic", "failures"],
        {
            "p": {"type": "integer"},
            "l": {"type": "integer"},
            "decomposed_generic": {"type": "boolean"},
            "failures": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["place", "reason"],
                    "properties": {
                        "reason": {"enum": ["ratio = 1", "ratio = p", "ratio = p⁻¹", "p does not split completely"]}
                    },
                },
            },
        },
    ),
    "scalarcert": _doc(["exists_scalar"], {"exists_scalar": {"type": "boolean"}}),
}


def schema_for(command: str, exit_code: int):
    return ERROR if exit_code == 2 else SCHEMAS[command]
