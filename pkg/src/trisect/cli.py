"""Command-line front end; every subcommand reads and writes JSON."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .families import (
    FamilyInputError,
    Fam1Inputs,
    Fam2Inputs,
    ResidualError,
    gen_fam1,
    gen_fam2,
    verify_fam1,
    verify_fam2,
)
from .surface import DegenerateSurfaceError, EllipticSurface, SurfacePoint, classify_all_fibres
from .trisection import (
    AdmissibilityError,
    NonReducedCurveError,
    PencilParams,
    Trisection,
    build_trisection_closed,
    build_trisection_generic,
    fibre_intersection,
    gamma_for_point,
    genus,
    is_fam_k_member,
    is_fam_L_admissible,
    singularity_multiplicity,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(ValueError):
    pass


def _rat(data: dict, key: str, default=None) -> Fraction:
    if key not in data:
        if default is not None:
            return Fraction(default)
        raise InputError(f"missing field {key!r}")
    try:
        return Fraction(str(data[key]))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"field {key!r} is not a rational: {data[key]!r}") from exc


def _surface(data: dict) -> EllipticSurface:
    src = data.get("surface", data)
    if "f" not in src or "g" not in src:
        raise InputError("surface needs 'f' and 'g' coefficient lists")
    return EllipticSurface.from_json(src)


def _trisection(data: dict) -> Trisection:
    if "trisection" not in data:
        raise InputError("missing field 'trisection'")
    return Trisection.from_json(data["trisection"])


def _point(raw, names=("x", "y", "t")) -> tuple:
    if isinstance(raw, dict):
        return tuple(Fraction(str(raw[k])) for k in names)
    if isinstance(raw, list) and len(raw) == len(names):
        return tuple(Fraction(str(v)) for v in raw)
    raise InputError(f"expected a point with coordinates {names}")


def _params(data: dict) -> PencilParams:
    return PencilParams(_rat(data, "a"), _rat(data, "b"), _rat(data, "t0"))


def cmd_fibres(data: dict):
    report = classify_all_fibres(_surface(data)).to_json()
    return report, EXIT_OK


def cmd_admissible(data: dict):
    s = _surface(data)
    verdict = is_fam_L_admissible(s, _rat(data, "a"), _rat(data, "b"), _rat(data, "t0"))
    return {"admissible": verdict.ok, "reason": verdict.reason}, EXIT_OK if verdict.ok else EXIT_FAIL


def _member_report(s: EllipticSurface, p: PencilParams, T: Trisection) -> dict:
    Q = p.base_point(s)
    mult = singularity_multiplicity(s, T, Q.x, Q.t)
    return {"trisection": T.to_json(), "Q": Q.to_json(), "multiplicity_at_Q": mult}


def cmd_build(data: dict):
    s, p = _surface(data), _params(data)
    if "R" in data:
        gamma = gamma_for_point(s, p, SurfacePoint(*_point(data["R"])))
    else:
        gamma = _rat(data, "gamma", 0)
    builder = build_trisection_generic if data.get("method") == "generic" else build_trisection_closed
    out = _member_report(s, p, builder(s, p, gamma))
    out["gamma"] = str(gamma)
    return out, EXIT_OK if out["multiplicity_at_Q"] == 3 else EXIT_FAIL


def cmd_gamma_for(data: dict):
    s, p = _surface(data), _params(data)
    R = SurfacePoint(*_point(data.get("R")))
    gamma = gamma_for_point(s, p, R)
    out = _member_report(s, p, build_trisection_closed(s, p, gamma))
    out["gamma"] = str(gamma)
    return out, EXIT_OK


def cmd_multiplicity(data: dict):
    s, T = _surface(data), _trisection(data)
    x, t = _point(data.get("point"), ("x", "t"))
    return {"multiplicity": singularity_multiplicity(s, T, x, t)}, EXIT_OK


def cmd_genus(data: dict):
    report = genus(_surface(data), _trisection(data))
    return report.to_json(), EXIT_OK


def cmd_intersect(data: dict):
    s, T = _surface(data), _trisection(data)
    known = _rat(data, "x") if "x" in data else None
    return fibre_intersection(s, T, _rat(data, "t1"), known).to_json(), EXIT_OK


def cmd_fam1(data: dict):
    out = gen_fam1(Fam1Inputs.from_json(data))
    report = verify_fam1(out)
    body = out.to_json()
    body["report"] = report.to_json()
    return body, EXIT_OK if report.passed else EXIT_FAIL


def cmd_fam2(data: dict):
    samples = [Fraction(str(h)) for h in data.get("samples", [0, 1, -1])]
    out = gen_fam2(Fam2Inputs.from_json(data))
    report = verify_fam2(out, samples)
    body = out.to_json(samples)
    body["report"] = report.to_json()
    return body, EXIT_OK if report.passed else EXIT_FAIL


def cmd_famk_check(data: dict):
    member = is_fam_k_member(_surface(data), _rat(data, "a"), _rat(data, "t0"))
    return {"member": member}, EXIT_OK if member else EXIT_FAIL


def cmd_verify_examples(data: dict):
    rows = run_all(data.get("overrides"))
    passed = all(r.ok for r in rows)
    body = {
        "passed": passed,
        "total": len(rows),
        "failed": sum(not r.ok for r in rows),
        "rows": [r.to_json() for r in rows],
    }
    return body, EXIT_OK if passed else EXIT_FAIL


COMMANDS = {
    "fibres": (cmd_fibres, "classify the bad fibres of a surface"),
    "admissible": (cmd_admissible, "check the pencil conditions for (a, b, t0)"),
    "build": (cmd_build, "build a pencil member from gamma or a point R"),
    "gamma-for": (cmd_gamma_for, "pencil parameter of the member through R"),
    "multiplicity": (cmd_multiplicity, "multiplicity of a trisection at a point"),
    "genus": (cmd_genus, "singular locus and genus of a trisection"),
    "intersect": (cmd_intersect, "meet a trisection with one fibre"),
    "fam1": (cmd_fam1, "generate and verify a genus-zero family member"),
    "fam2": (cmd_fam2, "generate and verify a degenerate-branch pencil"),
    "famk-check": (cmd_famk_check, "test the completed-square family condition"),
    "verify-paper-examples": (cmd_verify_examples, "rerun every bundled worked example"),
}

NO_INPUT = {"verify-paper-examples"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trisect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("-i", "--input", help="JSON input file (default: stdin)")
        cmd.add_argument("-o", "--out", help="write output to this file instead of stdout")
        cmd.add_argument("--output", choices=("json", "table"), default="json")
    return parser


def _flatten(obj, prefix="") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        items = []
        for k, v in obj.items():
            items.extend(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return items
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        items = []
        for i, v in enumerate(obj):
            items.extend(_flatten(v, f"{prefix}[{i}]"))
        return items
    return [(prefix, json.dumps(obj) if isinstance(obj, list) else str(obj))]


def render_table(command: str, body: dict) -> str:
    if command == "verify-paper-examples":
        width = max((len(r["fixture"]) for r in body["rows"]), default=0)
        lines = [
            f"{'PASS' if r['ok'] else 'FAIL'}  {r['fixture']:<{width}}  {r['check']}"
            + ("" if r["ok"] else f"  ({r['detail']})")
            for r in body["rows"]
        ]
        lines.append(f"{body['total'] - body['failed']}/{body['total']} checks passed")
        return "\n".join(lines)
    pairs = _flatten(body)
    width = max((len(k) for k, _ in pairs), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


def _read_input(args) -> dict:
    if args.command in NO_INPUT and not args.input:
        return {}
    text = open(args.input).read() if args.input else sys.stdin.read()
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    return data


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    handler, _ = COMMANDS[args.command]
    try:
        body, code = handler(_read_input(args))
    except (
        InputError,
        KeyError,
        DegenerateSurfaceError,
        AdmissibilityError,
        NonReducedCurveError,
        FamilyInputError,
        ResidualError,
        ValueError,
        ArithmeticError,
    ) as exc:
        message = exc.reason if isinstance(exc, AdmissibilityError) else str(exc)
        print(json.dumps({"error": type(exc).__name__, "message": message}), file=sys.stderr)
        return EXIT_ERROR
    if args.output == "table":
        text = render_table(args.command, body)
    else:
        text = json.dumps(body, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
