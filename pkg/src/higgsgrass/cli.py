"""Command-line front end: JSON problem files in, sorted JSON envelopes out.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 S-pair budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .grasseq import FiberFirstOrder, grass_ideal, restrict_fiber
from .grobner import (
    Ideal,
    ResourceLimit,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    monomial_minimal_primes,
    projective_degree,
    start_stats,
)
from .higgsfield import HiggsField, validate_higgs
from .parsing import parse_many, parse_poly
from .polyring import GREVLEX, Poly, PolyError, evaluate, format_poly, order_from_name
from .rank2 import classify_rank2, singular_locus_rank2
from .spectral import spectral_fiber_degree, spectral_ideal
from .structure import JordanSpec, component_ideals, predicted_ideal
from .systems import (
    certified_point_count,
    flag_fiber_report,
    flag_ideal,
    quot_canonicalize,
    simpson_grass_check,
    flag_case_matrix,
)


class InputError(PolyError):
    """Malformed problem file."""


# ---------------------------------------------------------------------------
# reading inputs


def _load(path: str) -> Any:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    _digest.update(raw)
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


_digest = hashlib.sha256()


def _need(obj: dict, key: str, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"missing field {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"field {key!r} has the wrong type")
    return value


def higgs_from_json(obj: dict) -> HiggsField:
    """Accept a bare HiggsField object or a problem wrapper {"higgs": ...}."""
    if isinstance(obj, dict) and "higgs" in obj:
        obj = obj["higgs"]
    base_vars = tuple(_need(obj, "base_vars", list))
    mats_text = _need(obj, "matrices", list)
    mats = []
    for m in mats_text:
        if not isinstance(m, list):
            raise InputError("matrices must be lists of rows")
        mats.append([parse_many([str(a) for a in row], base_vars) for row in m])
    H = validate_higgs(mats, base_vars)
    if "base_dim" in obj and int(obj["base_dim"]) != H.n:
        raise InputError(f"base_dim says {obj['base_dim']}, found {H.n} matrices")
    if "rank" in obj and int(obj["rank"]) != H.r:
        raise InputError(f"rank says {obj['rank']}, matrices are {H.r} x {H.r}")
    return H


def higgs_to_json(H: HiggsField) -> dict:
    return {
        "base_dim": str(H.n),
        "rank": str(H.r),
        "base_vars": list(H.base_vars),
        "matrices": [[[format_poly(a) for a in row] for row in m] for m in H.matrices],
    }


def spec_from_json(obj: dict) -> JordanSpec:
    if isinstance(obj, dict) and "spec" in obj:
        obj = obj["spec"]
    base_vars = tuple(obj.get("base_vars", ["x"])) if isinstance(obj, dict) else ()
    blocks = []
    for b in _need(obj, "blocks", list):
        lam = parse_poly(str(_need(b, "lambda")), base_vars)
        blocks.append((lam, int(_need(b, "size")), int(b.get("mult", 1))))
    return JordanSpec(base_vars, tuple(blocks))


def ideal_from_json(obj: dict) -> Ideal:
    vars = tuple(_need(obj, "vars", list))
    gens = parse_many([str(g) for g in _need(obj, "generators", list)], vars)
    return Ideal(vars, gens, order_from_name(obj.get("order", "grevlex")))


def _point(text: Optional[str], n: int) -> List[Fraction]:
    if text is None:
        return [Fraction(0)] * n
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        pt = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot read point {text!r}") from None
    if len(pt) != n:
        raise InputError(f"point needs {n} coordinates, got {len(pt)}")
    return pt


def _rat(c) -> str:
    return str(Fraction(c))


# ---------------------------------------------------------------------------
# output helpers


def _gens(I: Ideal, order=None) -> List[str]:
    return [format_poly(g, order or GREVLEX) for g in I.gens]


def _ideal_payload(I: Ideal, n_base: int = 0) -> dict:
    order = FiberFirstOrder(n_base) if n_base else GREVLEX
    return {"vars": list(I.vars), "generators": _gens(I, order)}


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> dict:
    H = higgs_from_json(_load(args.input))
    return {"valid": True, "base_dim": str(H.n), "rank": str(H.r)}


def cmd_grass(args) -> dict:
    H = higgs_from_json(_load(args.input))
    G = grass_ideal(H, args.d, include_pluecker_relations=args.pluecker_relations)
    out = _ideal_payload(G.ideal, len(H.base_vars))
    out.update({"d": str(G.d), "kind": G.kind, "fiber_vars": list(G.fiber_vars)})
    return out


def cmd_structure(args) -> dict:
    spec = spec_from_json(_load(args.spec))
    n_base = len(spec.base_vars)
    if args.mode == "component":
        comps = component_ideals(spec) if args.v is None else [predicted_ideal(spec, "component", args.v)]
        return {
            "components": [
                dict(_ideal_payload(c.ideal, n_base), v=str(c.v), dimension=str(c.dimension),
                     fiber_degree=str(c.fiber_degree))
                for c in comps
            ]
        }
    return _ideal_payload(predicted_ideal(spec, args.mode), n_base)


def cmd_classify2(args) -> dict:
    H = higgs_from_json(_load(args.input))
    c = classify_rank2(H)
    order = FiberFirstOrder(len(H.base_vars))
    witness: Dict[str, Any] = {}
    if c.which is not None:
        witness["matrix"] = str(c.which + 1)
    if c.generator is not None:
        witness["generator"] = format_poly(c.generator, order)
    if c.tag == "vertical":
        witness["gcd"] = format_poly(c.gcd)
    if c.sqrt is not None and c.tag == "reducible-square":
        witness["sqrt"] = format_poly(c.sqrt)
    if c.factors:
        witness["factors"] = [format_poly(f, order) for f in c.factors]
    return {"tag": c.tag, "delta": format_poly(c.delta), "witness": witness}


def cmd_singular2(args) -> dict:
    H = higgs_from_json(_load(args.input))
    S = singular_locus_rank2(H)
    out = _ideal_payload(S, len(H.base_vars))
    out["basis"] = [format_poly(g, FiberFirstOrder(len(H.base_vars))) for g in S.basis]
    out["smooth"] = S.is_unit()
    return out


def cmd_spectral(args) -> dict:
    H = higgs_from_json(_load(args.input))
    S = spectral_ideal(H)
    return {
        "vars": list(S.ideal.vars),
        "eigen_vars": list(S.l_vars),
        "generators": [
            {"d_exponent": [str(k) for k in a], "generator": format_poly(g)}
            for a, g in zip(S.index, S.ideal.gens)
        ],
    }


def cmd_spectral_degree(args) -> dict:
    H = higgs_from_json(_load(args.input))
    S = spectral_ideal(H)
    pt = _point(args.point, H.n)
    return {"point": [_rat(a) for a in pt], "degree": str(spectral_fiber_degree(S, pt))}


def cmd_simpson(args) -> dict:
    rep = simpson_grass_check(args.n, args.d)
    n_base = args.n
    return {
        "n": str(args.n),
        "d": str(args.d),
        "ideal": _ideal_payload(rep.ideal, n_base)["generators"],
        "basis": [format_poly(g, FiberFirstOrder(n_base)) for g in rep.ideal.basis],
        "radical": _ideal_payload(rep.radical, n_base)["generators"],
        "certified": rep.certified,
        "powers": [str(k) for k in rep.powers],
    }


def cmd_flag(args) -> dict:
    case = _load(args.case_file)
    if isinstance(case, dict) and "case" in case:
        params = {k: Fraction(str(case[k])) for k in ("alpha", "beta", "gamma") if k in case}
        M = flag_case_matrix(str(case["case"]), **params)
        base = ("x",)
        H = validate_higgs([[[Poly.const(base, c) for c in row] for row in M]], base)
    else:
        H = higgs_from_json(case)
    F = flag_ideal(H)
    text_point = args.point if args.point is not None else (
        ",".join(str(a) for a in case.get("point", [])) if isinstance(case, dict) and "point" in case else None
    )
    pt = _point(text_point, len(H.base_vars))
    rep = flag_fiber_report(F, pt, seed=args.seed)
    order = FiberFirstOrder(len(H.base_vars))
    return {
        "I1": [format_poly(g, order) for g in F.I1.gens],
        "I2": [format_poly(g, order) for g in F.I2.gens],
        "f": format_poly(F.f, order),
        "point": [_rat(a) for a in pt],
        "length": str(rep["length"]),
        "point_count": "unknown" if rep["point_count"] is None else str(rep["point_count"]),
    }


def _groups(text: str) -> List[List[str]]:
    groups = [[v for v in g.split(",") if v] for g in text.replace(" ", "").split(";")]
    if not all(groups):
        raise InputError(f"cannot read groups {text!r}")
    return groups


def cmd_fiber(args) -> dict:
    obj = _load(args.input)
    if isinstance(obj, dict) and ("higgs" in obj or "matrices" in obj):
        H = higgs_from_json(obj)
        G = grass_ideal(H, args.d, include_pluecker_relations=args.d >= 2)
        pt = _point(args.point, H.n)
        fiber = restrict_fiber(G, pt)
        groups = [list(G.fiber_vars)]
    else:
        I = ideal_from_json(obj)
        if args.groups is None:
            raise InputError("an ideal input needs --groups")
        groups = _groups(args.groups)
        flat = {v for g in groups for v in g}
        base = [v for v in I.vars if v not in flat]
        pt = _point(args.point, len(base))
        fiber_vars = tuple(v for v in I.vars if v in flat)
        bindings = dict(zip(base, pt))
        fiber = Ideal(fiber_vars, [evaluate(g, bindings).to_vars(fiber_vars) for g in I.gens], GREVLEX)
    length = projective_degree(fiber, groups, seed=args.seed)
    count = certified_point_count(fiber, groups, length, seed=args.seed)
    return {
        "point": [_rat(a) for a in pt],
        "length": str(length),
        "point_count": "unknown" if count is None else str(count),
    }


def _matrix_arg(text: str):
    if os.path.exists(text):
        obj = _load(text)
    else:
        _digest.update(text.encode("utf-8"))
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"--matrix is neither a file nor JSON: {exc}") from None
    if isinstance(obj, dict):
        var = str(obj.get("var", "x"))
        rows = _need(obj, "matrix", list)
    else:
        var, rows = "x", obj
    if len(rows) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in rows):
        raise InputError("the Quot matrix must be 2 x 2")
    return [parse_many([str(a) for a in row], (var,)) for row in rows]


def cmd_quot(args) -> dict:
    pt = quot_canonicalize(_matrix_arg(args.matrix))
    return {
        "p1": format_poly(pt.p1),
        "p2": format_poly(pt.p2),
        "q": format_poly(pt.q),
        "invariant": pt.invariant,
        "colength": str(pt.colength),
        "phi_pair": [format_poly(pt.p1), format_poly(pt.q)],
    }


def _pair(args):
    I = ideal_from_json(_load(args.input))
    J = ideal_from_json(_load(args.against))
    if set(I.vars) != set(J.vars):
        raise InputError("the two ideals live over different variables")
    return I, J.to_vars(I.vars).with_order(I.order)


def cmd_compare(args) -> dict:
    I, J = _pair(args)
    return {"equal": ideal_equal(I, J)}


def cmd_intersect(args) -> dict:
    I, J = _pair(args)
    K = ideal_intersect(I, J)
    return {"vars": list(K.vars), "generators": [format_poly(g, I.order) for g in K.basis]}


def cmd_member(args) -> dict:
    I = ideal_from_json(_load(args.input))
    _digest.update(args.poly.encode("utf-8"))
    p = parse_poly(args.poly, I.vars)
    return {"member": ideal_member(p, I)}


def cmd_minimal_primes(args) -> dict:
    I = ideal_from_json(_load(args.input))
    primes = monomial_minimal_primes(I)
    return {"count": str(len(primes)), "primes": [_gens(P) for P in primes]}


COMMANDS = {
    "check": cmd_check,
    "grass": cmd_grass,
    "structure": cmd_structure,
    "classify2": cmd_classify2,
    "singular2": cmd_singular2,
    "spectral": cmd_spectral,
    "spectral-degree": cmd_spectral_degree,
    "simpson": cmd_simpson,
    "flag": cmd_flag,
    "fiber": cmd_fiber,
    "quot": cmd_quot,
    "compare": cmd_compare,
    "member": cmd_member,
    "intersect": cmd_intersect,
    "minimal-primes": cmd_minimal_primes,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random charts (default 0)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; work runs serially")

    p = argparse.ArgumentParser(prog="higgsgrass", description="Exact Higgs Grassmannian computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help, needs_input=True):
        sp = sub.add_parser(name, help=help, parents=[common])
        if needs_input:
            sp.add_argument("--in", dest="input", required=True, help="problem JSON file")
        return sp

    add("check", "validate a Higgs field")
    sp = add("grass", "defining ideal of the Higgs Grassmannian")
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--pluecker-relations", action="store_true")
    sp = add("structure", "predicted ideal of a Jordan specification", needs_input=False)
    sp.add_argument("--spec", required=True, help="JordanSpec JSON file")
    sp.add_argument("--mode", choices=("full", "component", "single"), default="full")
    sp.add_argument("--v", type=int, default=None, help="component level (1-based)")
    add("classify2", "discriminant classification of a rank-2 field")
    add("singular2", "singular locus for an irreducible rank-2 field on a curve")
    add("spectral", "spectral-cover ideal")
    sp = add("spectral-degree", "spectral fiber degree at a point")
    sp.add_argument("--point", default=None, help="comma separated rationals")
    sp = add("simpson", "Simpson system certificate", needs_input=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=1)
    sp = add("flag", "flag ideal and fiber report", needs_input=False)
    sp.add_argument("--case-file", required=True)
    sp.add_argument("--point", default=None)
    sp = add("fiber", "length and point count of a projective fiber")
    sp.add_argument("--point", default=None)
    sp.add_argument("--groups", default=None, help="e.g. 'z1,z2;y1,y2'")
    sp.add_argument("--d", type=int, default=1)
    sp = add("quot", "canonical form of a Quot point", needs_input=False)
    sp.add_argument("--matrix", required=True, help="JSON 2x2 matrix or a file containing it")
    sp = add("compare", "ideal equality")
    sp.add_argument("--against", required=True)
    sp = add("member", "ideal membership")
    sp.add_argument("--poly", required=True)
    sp = add("intersect", "intersection of two ideals")
    sp.add_argument("--against", required=True)
    add("minimal-primes", "minimal primes of a squarefree monomial ideal")
    return p


def _render_text(obj: Any, indent: str = "") -> List[str]:
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.extend(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}- {_scalar(v)}")
    else:
        lines.append(indent + _scalar(obj))
    return lines


def _scalar(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v == [] or v == {}:
        return "(none)"
    return str(v)


def main(argv: Optional[Sequence[str]] = None) -> int:
    global _digest
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _digest = hashlib.sha256()
    stats = start_stats()
    envelope: Dict[str, Any] = {"command": args.command}
    code = 0
    try:
        envelope["result"] = COMMANDS[args.command](args)
        envelope["status"] = "ok"
    except ResourceLimit as exc:
        envelope["status"] = "budget-exhausted"
        envelope["error"] = {"type": "ResourceLimit", "message": str(exc)}
        code = 3
    except (PolyError, ValueError) as exc:
        envelope["status"] = "error"
        envelope["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = 1
    envelope["input_digest"] = _digest.hexdigest()
    envelope["stats"] = {k: str(v) for k, v in stats.items()}
    if args.format == "text":
        out = "\n".join(_render_text(envelope)) + "\n"
    else:
        out = json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    sys.stdout.flush()
    sys.stdout.buffer.write(out.encode("utf-8"))
    sys.stdout.buffer.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
