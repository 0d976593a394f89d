"""JSON encodings of fields, matrices and the package's structured objects."""

from __future__ import annotations

import json
from pathlib import Path

from .compat import PS, STEINBERG, LocalAutomorphicDatum
from .errors import InvalidInput
from .fields import Field, FiniteField, field_from_descriptor
from .matrix import Matrix
from .modl import MatGroup, DEFAULT_CAP
from .phin import FilStep, FilteredPhiNModule, PhiNModule
from .weil_deligne import WDRep

SCHEMA_VERSION = 1


def load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {Path(path).name}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{Path(path).name}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def _need(doc, *keys):
    if not isinstance(doc, dict):
        raise InvalidInput("expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise InvalidInput(f"missing keys: {', '.join(missing)}")


def _int(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{name} must be an integer")
    return value


def matrix_from_json(E: Field, rows) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvalidInput("matrix must be a list of rows")
    return Matrix(E, [[E(x) for x in r] for r in rows])


def vector_from_json(E: Field, v):
    if not isinstance(v, list):
        raise InvalidInput("vector must be a list")
    return tuple(E(x) for x in v)


# -- Weil-Deligne representations


def wd_from_json(doc) -> WDRep:
    _need(doc, "q", "E", "frob", "n")
    E = field_from_descriptor(doc["E"])
    F = matrix_from_json(E, doc["frob"])
    N = matrix_from_json(E, doc["n"])
    d = _int(doc.get("d", F.nrows), "d")
    return WDRep(_int(doc["q"], "q"), E, d, F, N)


def wd_to_json(w: WDRep):
    return {"q": w.q, "E": w.E.descriptor(), "d": w.d, "frob": w.F.to_json(), "n": w.N.to_json()}


# -- (phi, N)-modules


def phin_from_json(doc):
    """A PhiNModule, or a FilteredPhiNModule when a filtration is present."""
    _need(doc, "l", "f", "E", "phi", "n")
    E = field_from_descriptor(doc["E"])
    l, f = _int(doc["l"], "l"), _int(doc["f"], "f")
    if not isinstance(doc["phi"], list) or not isinstance(doc["n"], list):
        raise InvalidInput("phi and n must be lists of matrices")
    phi = tuple(matrix_from_json(E, m) for m in doc["phi"])
    n = tuple(matrix_from_json(E, m) for m in doc["n"])
    d = _int(doc.get("d", phi[0].nrows if phi else 0), "d")
    module = PhiNModule(l, f, d, E, phi, n)
    if "filtration" not in doc:
        return module
    filt = doc["filtration"]
    if not isinstance(filt, list):
        raise InvalidInput("filtration must be a list (one entry per component)")
    steps = []
    for comp in filt:
        if not isinstance(comp, list):
            raise InvalidInput("each filtration component must be a list of steps")
        row = []
        for s in comp:
            _need(s, "jump", "basis")
            row.append(FilStep(_int(s["jump"], "jump"), tuple(vector_from_json(E, v) for v in s["basis"])))
        steps.append(tuple(row))
    return FilteredPhiNModule(module, tuple(steps), doc.get("valuation"))


def phin_to_json(D):
    mod = D.module if isinstance(D, FilteredPhiNModule) else D
    out = {
        "l": mod.l,
        "f": mod.f,
        "d": mod.d,
        "E": mod.E.descriptor(),
        "phi": [m.to_json() for m in mod.phi],
        "n": [m.to_json() for m in mod.n],
    }
    if isinstance(D, FilteredPhiNModule):
        out["filtration"] = [
            [{"jump": s.jump, "basis": [[x.to_json() for x in v] for v in s.basis]} for s in comp]
            for comp in D.filtration
        ]
        if D.valuation is not None:
            out["valuation"] = D.valuation
    return out


def require_filtered(D) -> FilteredPhiNModule:
    if not isinstance(D, FilteredPhiNModule):
        raise InvalidInput("this command needs a module with a filtration")
    return D


# -- automorphic data


def automorphic_from_json(doc) -> LocalAutomorphicDatum:
    _need(doc, "kind", "q", "E")
    E = field_from_descriptor(doc["E"])
    kind = doc["kind"]
    q = _int(doc["q"], "q")
    if kind == PS:
        _need(doc, "alpha", "beta")
        params = (E(doc["alpha"]), E(doc["beta"]))
    elif kind == STEINBERG:
        _need(doc, "c")
        params = (E(doc["c"]),)
    else:
        params = ()
    return LocalAutomorphicDatum(kind, q, E, params)


def galois_from_json(doc):
    """Galois side of a comparison: a WDRep document or a (phi, N)-module document."""
    if isinstance(doc, dict) and "frob" in doc:
        return wd_from_json(doc)
    return phin_from_json(doc)


# -- finite groups and mod-l certificates


def _finite_field(doc) -> FiniteField:
    l = _int(doc["l"], "l")
    k = _int(doc.get("k", 1), "k")
    return FiniteField(l, k, doc.get("minpoly"))


def group_from_json(doc) -> MatGroup:
    _need(doc, "l", "generators")
    F = _finite_field(doc)
    gens = [matrix_from_json(F, g) for g in doc["generators"]]
    cap = _int(doc.get("cap", DEFAULT_CAP), "cap")
    return MatGroup(F.l, F.k, gens, cap, F)


def decgen_from_json(doc):
    _need(doc, "p", "l", "splits_completely", "places")
    F = _finite_field(doc)
    places = []
    for pl in doc["places"]:
        _need(pl, "alpha", "beta")
        places.append((F(pl["alpha"]), F(pl["beta"])))
    if not isinstance(doc["splits_completely"], bool):
        raise InvalidInput("splits_completely must be a boolean")
    return _int(doc["p"], "p"), F.l, places, doc["splits_completely"], F


def scalarcert_from_json(doc):
    _need(doc, "l", "elements")
    F = _finite_field(doc)
    out = []
    for el in doc["elements"]:
        _need(el, "h", "c")
        out.append((matrix_from_json(F, el["h"]), F(el["c"])))
    return out, F


def dumps(doc, pretty: bool = False) -> str:
    doc = dict(doc)
    doc["wdforge_schema"] = SCHEMA_VERSION
    if pretty:
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
