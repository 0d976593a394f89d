"""Command-line interface.

Every command prints one JSON document to stdout.  Exit status: 0 when the
command succeeds and its predicate (if any) holds, 1 when the predicate is
false, 2 on invalid input or any library error.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .compat import LEVELS, compat_check
from .errors import ValidationFailed, WDForgeError
from .functor import tau_independence_check, wd_of
from .modl import exists_scalar_outside_cyclotomic, is_decomposed_generic_at, is_enormous
from .phin import (
    FilteredPhiNModule,
    hodge_tate_weights,
    is_monodromy_module,
    is_weakly_admissible,
    is_weight_zero_type,
    l_invariant,
)
from .weil_deligne import (
    frobenius_semisimplify,
    is_generic_parameter,
    is_isomorphic,
    monodromy_dominates,
    nilpotent_ranks,
    segments,
    semisimplify,
)

COMPAT_NOTE = (
    "Automorphic parameters are taken already normalised: apply any twist by "
    "|det|^(-1/2) before writing the input file, since q^(1/2) usually lies "
    "outside the coefficient field."
)


def _detect(doc):
    if not isinstance(doc, dict):
        return None
    if "frob" in doc:
        return "wd"
    if "phi" in doc:
        return "phin"
    if "generators" in doc:
        return "group"
    if "places" in doc:
        return "decgen"
    if "elements" in doc:
        return "scalarcert"
    if "kind" in doc:
        return "automorphic"
    return None


_LOADERS = {
    "wd": ser.wd_from_json,
    "phin": ser.phin_from_json,
    "group": ser.group_from_json,
    "decgen": ser.decgen_from_json,
    "scalarcert": ser.scalarcert_from_json,
    "automorphic": ser.automorphic_from_json,
}


def cmd_validate(args):
    doc = ser.load_json(args.file)
    kind = _detect(doc)
    if kind is None:
        return {"valid": False, "kind": None, "violations": ["unrecognised document type"]}, 1
    try:
        obj = _LOADERS[kind](doc)
    except ValidationFailed as exc:
        return {"valid": False, "kind": kind, "violations": exc.report}, 1
    if kind == "phin" and isinstance(obj, FilteredPhiNModule):
        kind = "filtered-phin"
    return {"valid": True, "kind": kind, "violations": []}, 0


def _phin(path):
    return ser.phin_from_json(ser.load_json(path))


def _wd(path):
    return ser.wd_from_json(ser.load_json(path))


def cmd_wd(args):
    w = wd_of(_phin(args.file), args.tau)
    return {"tau": args.tau, "wd": ser.wd_to_json(w)}, 0


def cmd_tauindep(args):
    rep = tau_independence_check(_phin(args.file))
    return rep.to_json(), 0 if rep.verdict else 1


def cmd_fss(args):
    return {"wd": ser.wd_to_json(frobenius_semisimplify(_wd(args.file)))}, 0


def cmd_ss(args):
    return {"wd": ser.wd_to_json(semisimplify(_wd(args.file)))}, 0


def cmd_segments(args):
    segs = segments(frobenius_semisimplify(_wd(args.file)))
    return {"segments": [s.to_json() for s in segs]}, 0


def cmd_iso(args):
    ok = is_isomorphic(_wd(args.file1), _wd(args.file2), strict=args.strict)
    return {"isomorphic": ok, "strict": args.strict}, 0 if ok else 1


def cmd_generic(args):
    ok = is_generic_parameter(frobenius_semisimplify(_wd(args.file)))
    return {"generic": ok}, 0 if ok else 1


def cmd_linv(args):
    D = ser.require_filtered(_phin(args.file))
    res = l_invariant(D)
    return {"monodromy": is_monodromy_module(D).to_json(), **res.to_json()}, 0


def cmd_wa(args):
    rep = is_weakly_admissible(ser.require_filtered(_phin(args.file)))
    return rep.to_json(), 0 if rep.verdict else 1


def cmd_htweights(args):
    D = ser.require_filtered(_phin(args.file))
    weights = [hodge_tate_weights(D, t) for t in range(D.f)]
    zero_type = is_weight_zero_type(D) if D.d == 2 else None
    return {"weights": weights, "weight_zero_type": zero_type}, 0


def cmd_monodromy(args):
    a, b = _wd(args.file1), _wd(args.file2)
    ok = monodromy_dominates(a, b)
    return {"dominates": ok, "ranks_first": nilpotent_ranks(a.N), "ranks_second": nilpotent_ranks(b.N)}, 0 if ok else 1


def cmd_compat(args):
    galois = ser.galois_from_json(ser.load_json(args.galois))
    auto = ser.automorphic_from_json(ser.load_json(args.automorphic))
    rep = compat_check(galois, auto, level=args.level, tau=args.tau)
    return rep.to_json(), 0 if rep.verdict else 1


def cmd_enormous(args):
    rep = is_enormous(ser.group_from_json(ser.load_json(args.file)))
    return rep.to_json(), 0 if rep.verdict else 1


def cmd_decgen(args):
    p, l, places, splits, F = ser.decgen_from_json(ser.load_json(args.file))
    rep = is_decomposed_generic_at(p, l, places, splits, F)
    return rep.to_json(), 0 if rep.verdict else 1


def cmd_scalarcert(args):
    elements, F = ser.scalarcert_from_json(ser.load_json(args.file))
    ok = exists_scalar_outside_cyclotomic(elements, F)
    return {"exists_scalar": ok}, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wdforge", description="Exact computations with (phi, N)-modules and Weil-Deligne representations.")
    p.add_argument("--pretty", action="store_true", help="indented JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, files=("file",), epilog=None):
        sp = sub.add_parser(name, help=help_, description=help_, epilog=epilog)
        for f in files:
            sp.add_argument(f)
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check any input document against its invariants")
    add("wd", cmd_wd, "Weil-Deligne representation of a tau-component").add_argument("--tau", type=int, default=0)
    add("tauindep", cmd_tauindep, "compare the representations of all tau-components")
    add("fss", cmd_fss, "Frobenius semisimplification")
    add("ss", cmd_ss, "semisimplification (semisimple F, N = 0)")
    add("segments", cmd_segments, "segment decomposition of the F-semisimplification")
    add("iso", cmd_iso, "isomorphism of F-semisimplifications", ("file1", "file2")).add_argument(
        "--strict", action="store_true", help="also compare Jordan types of F"
    )
    add("generic", cmd_generic, "genericity of a two-dimensional parameter")
    add("linv", cmd_linv, "L-invariant of a two-dimensional monodromy module")
    add("wa", cmd_wa, "weak admissibility (rank <= 2)")
    add("htweights", cmd_htweights, "Hodge-Tate weights per tau-component")
    add("monodromy", cmd_monodromy, "whether the first N lies in the closure of the second's orbit", ("file1", "file2"))
    c = add("compat", cmd_compat, "compare a Galois-side parameter with an automorphic datum", ("galois", "automorphic"), COMPAT_NOTE)
    c.add_argument("--level", choices=LEVELS, default="fss")
    c.add_argument("--tau", type=int, default=0)
    add("enormous", cmd_enormous, "enormous-image report for a finite subgroup of GL2(F_{l^k})")
    add("decgen", cmd_decgen, "decomposed-generic check at a certificate prime")
    add("scalarcert", cmd_scalarcert, "existence of a scalar element with cyclotomic value != 1")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return 0
        sys.stdout.write(ser.dumps({"error": {"error": "UsageError", "message": "invalid command line"}}) + "\n")
        return 2
    try:
        doc, code = args.func(args)
    except WDForgeError as exc:
        doc, code = {"error": exc.to_dict()}, 2
    except (ValueError, TypeError, KeyError, IndexError, ZeroDivisionError) as exc:
        doc, code = {"error": {"error": "InvalidInput", "message": str(exc) or type(exc).__name__}}, 2
    sys.stdout.write(ser.dumps(doc, args.pretty) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
