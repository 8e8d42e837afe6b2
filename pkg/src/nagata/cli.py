"""Command-line interface.

Every analysis is a subcommand; ``--json`` switches any of them to a
stable machine-readable schema (top-level ``"schema": 1``), in which all
polynomials appear as canonical re-parseable strings and all rationals
as strings like ``"1/5"``.

Exit codes: 0 on success; 1 on a negative domain verdict (analyze /
classify on a non-automorphism, decompose when no representative exists,
oracle on a span mismatch); 2 on usage, parse, or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .classify import Classification, Verdict, classify
from .lojasiewicz import deformation_compare, loj_exponent
from .maps import (
    PolyEndo,
    build_nagata,
    compose,
    inverse_nagata,
    jacobian_report,
)
from .parse import ParseError, parse_poly2, parse_poly3
from .pde import DEFAULT_DEGREE_BOUND, kernel_oracle, solution_basis, verify_basis_against_oracle
from .poly import Poly, RING3, expand_bivariate
from .randgen import random_poly2

SCHEMA_VERSION = 1


def _endo_payload(e: PolyEndo) -> dict:
    return {"f": str(e.f), "g": str(e.g), "h": str(e.h)}


def _endo_lines(label: str, e: PolyEndo) -> list[str]:
    return [
        f"{label} f: {e.f}",
        f"{label} g: {e.g}",
        f"{label} h: {e.h}",
    ]


def _parse_endo(text: str) -> PolyEndo:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(
            "an endomorphism needs three comma-separated expressions", 1
        )
    f, g, h = (parse_poly3(part) for part in parts)
    return PolyEndo(f, g, h)


def _evidence_payload(c: Classification) -> dict:
    evidence: dict = {}
    if c.residual is not None:
        evidence["residual"] = str(c.residual)
    if c.representative is not None:
        evidence["representative"] = str(c.representative)
    if c.leading_form is not None:
        evidence["leading_form"] = str(c.leading_form)
    if c.leading_form_t1_derivative is not None:
        evidence["leading_form_t1_derivative"] = str(c.leading_form_t1_derivative)
    if c.tame_factors is not None:
        evidence["tame_factors"] = [_endo_payload(e) for e in c.tame_factors]
    return evidence


def _analysis_payload(phi: Poly) -> tuple[dict, list[str], int]:
    """Shared full report for ``analyze`` and ``random``."""
    report = jacobian_report(phi)
    verdict = classify(phi)
    is_auto = report.residual.is_zero()
    payload = {
        "phi": str(phi),
        "residual": str(report.residual),
        "jacobian_determinant": str(report.determinant),
        "is_automorphism": is_auto,
        "representative": None,
        "inverse": None,
        "classification": verdict.verdict.value,
        "evidence": _evidence_payload(verdict),
        "lojasiewicz_exponent": None,
    }
    lines = [
        f"phi: {phi}",
        f"residual: {report.residual}",
        f"jacobian determinant: {report.determinant}",
        f"automorphism: {'yes' if is_auto else 'no'}",
    ]
    if is_auto:
        p = verdict.representative
        inverse = inverse_nagata(p)
        loj = loj_exponent(p)
        payload["representative"] = str(p)
        payload["inverse"] = _endo_payload(inverse)
        payload["lojasiewicz_exponent"] = str(loj.exponent)
        lines.append(f"representative p: {p}")
        lines.extend(_endo_lines("inverse", inverse))
        lines.append(f"classification: {verdict.verdict.value}")
        lines.append(f"lojasiewicz exponent: {loj.exponent}")
    else:
        lines.append(f"classification: {verdict.verdict.value}")
    return payload, lines, 0 if is_auto else 1


def _cmd_analyze(args) -> tuple[int, dict, list[str]]:
    phi = parse_poly3(args.phi)
    payload, lines, code = _analysis_payload(phi)
    return code, payload, lines


def _cmd_invert(args) -> tuple[int, dict, list[str]]:
    p = parse_poly2(args.p)
    inverse = inverse_nagata(p)
    payload = {"p": str(p), "inverse": _endo_payload(inverse)}
    return 0, payload, _endo_lines("inverse", inverse)


def _cmd_compose(args) -> tuple[int, dict, list[str]]:
    outer = _parse_endo(args.outer)
    inner = _parse_endo(args.inner)
    result = compose(outer, inner)
    payload = {
        "outer": _endo_payload(outer),
        "inner": _endo_payload(inner),
        "result": _endo_payload(result),
    }
    return 0, payload, _endo_lines("composed", result)


def _cmd_classify(args) -> tuple[int, dict, list[str]]:
    phi = parse_poly3(args.phi)
    verdict = classify(phi)
    payload = {
        "phi": str(phi),
        "verdict": verdict.verdict.value,
        "evidence": _evidence_payload(verdict),
    }
    lines = [f"verdict: {verdict.verdict.value}"]
    for key, value in payload["evidence"].items():
        if key == "tame_factors":
            for i, factor in enumerate(verdict.tame_factors, start=1):
                lines.extend(_endo_lines(f"factor {i}", factor))
        else:
            lines.append(f"{key.replace('_', ' ')}: {value}")
    code = 1 if verdict.verdict is Verdict.NOT_AUTOMORPHISM else 0
    return code, payload, lines


def _cmd_basis(args) -> tuple[int, dict, list[str]]:
    basis = solution_basis(args.degree)
    payload = {
        "degree": basis.degree,
        "elements": [str(e) for e in basis.elements],
    }
    return 0, payload, [str(e) for e in basis.elements]


def _cmd_oracle(args) -> tuple[int, dict, list[str]]:
    result = kernel_oracle(args.degree, args.max_degree)
    verified = verify_basis_against_oracle(args.degree, args.max_degree)
    monomial_strings = [str(Poly(RING3, {m: 1})) for m in result.monomials]
    payload = {
        "degree": result.degree,
        "dimension": result.dimension,
        "monomials": monomial_strings,
        "kernel_basis": [[str(x) for x in vec] for vec in result.kernel_basis],
        "verified": verified,
    }
    lines = [f"kernel dimension: {result.dimension}"]
    for polynomial in result.polynomials():
        lines.append(f"kernel element: {polynomial}")
    lines.append(f"matches closed-form basis: {'yes' if verified else 'no'}")
    return (0 if verified else 1), payload, lines


def _loj_payload(label: str, report) -> dict:
    return {
        "p": label,
        "phi_degree": report.phi_degree,
        "inverse_degree": report.inverse_degree,
        "exponent": str(report.exponent),
    }


def _cmd_loj(args) -> tuple[int, dict, list[str]]:
    p = parse_poly2(args.p)
    if args.p_s is None:
        report = loj_exponent(p)
        payload = _loj_payload(str(p), report)
        lines = [
            f"phi degree: {report.phi_degree}",
            f"inverse degree: {report.inverse_degree}",
            f"lojasiewicz exponent: {report.exponent}",
        ]
        return 0, payload, lines
    p_s = parse_poly2(args.p_s)
    cmp_report = deformation_compare(p, p_s)
    payload = {
        "base": _loj_payload(str(p), cmp_report.base),
        "deformed": _loj_payload(str(p_s), cmp_report.deformed),
        "monotone": cmp_report.monotone,
        "ordering": cmp_report.ordering,
    }
    lines = [
        f"base exponent: {cmp_report.base.exponent}",
        f"deformed exponent: {cmp_report.deformed.exponent}",
        f"deformed {cmp_report.ordering}= base: monotonicity holds",
    ]
    return 0, payload, lines


def _cmd_decompose(args) -> tuple[int, dict, list[str]]:
    phi = parse_poly3(args.phi)
    nag = build_nagata(phi)
    present = nag.representative is not None
    payload = {
        "phi": str(phi),
        "representative": str(nag.representative) if present else None,
    }
    line = (
        f"representative p: {nag.representative}"
        if present
        else "representative: absent (phi is not a polynomial in x*z + y^2 and z)"
    )
    return (0 if present else 1), payload, [line]


def _cmd_random(args) -> tuple[int, dict, list[str]]:
    rng = random.Random(args.seed)
    p = random_poly2(rng, args.dvmax)
    phi = expand_bivariate(p)
    analysis, lines, _ = _analysis_payload(phi)
    payload = {
        "seed": args.seed,
        "dvmax": args.dvmax,
        "p": str(p),
        "analysis": analysis,
    }
    return 0, payload, [f"p: {p}", *lines]


def _add_json_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true",
                     help="emit machine-readable JSON on stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nagata",
        description="Exact analysis of Nagata-type polynomial maps of Q[x,y,z].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="residual, Jacobian determinant, automorphy, "
                                       "representative, classification, exponent")
    s.add_argument("phi", help="polynomial in x, y, z, e.g. 'x*z + y^2'")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_analyze)

    s = sub.add_parser("invert", help="explicit inverse of the map built from p(t1, t2)")
    s.add_argument("p", help="polynomial in t1, t2")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_invert)

    s = sub.add_parser("compose", help="compose two endomorphisms (outer after inner)")
    s.add_argument("outer", help="three comma-separated polynomials in x, y, z")
    s.add_argument("inner", help="three comma-separated polynomials in x, y, z")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_compose)

    s = sub.add_parser("classify", help="NotAutomorphism / WildAutomorphism / "
                                        "TameAutomorphism / AutomorphismTamenessUnknown")
    s.add_argument("phi")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_classify)

    s = sub.add_parser("basis", help="closed-form basis of homogeneous solutions "
                                     "of the residual equation in one degree")
    s.add_argument("degree", type=int)
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_basis)

    s = sub.add_parser("oracle", help="exact kernel of the residual map in one degree, "
                                      "plus a span check against the closed-form basis")
    s.add_argument("degree", type=int)
    s.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_BOUND,
                   help=f"oracle size cap (default {DEFAULT_DEGREE_BOUND})")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_oracle)

    s = sub.add_parser("loj", help="Lojasiewicz exponent at infinity; with a second "
                                   "argument, compare against a deformation")
    s.add_argument("p", help="polynomial in t1, t2")
    s.add_argument("p_s", nargs="?", default=None,
                   help="deformation with supp(p) contained in supp(p_s)")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_loj)

    s = sub.add_parser("decompose", help="recover p with phi = p(x*z + y^2, z), if it exists")
    s.add_argument("phi")
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_decompose)

    s = sub.add_parser("random", help="reproducible random p and its full analysis")
    s.add_argument("--dvmax", type=int, default=6,
                   help="bound on the (2,1)-weighted degree of p (default 6)")
    s.add_argument("--seed", type=int, default=0)
    _add_json_flag(s)
    s.set_defaults(handler=_cmd_random)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        code, payload, lines = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        document = {"schema": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(document, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(run())
