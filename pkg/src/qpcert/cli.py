"""Command-line interface.

Subcommands: coeffs, certify, triangles (count|list), fit, paper.
Every command renders one output document in text, json or csv form; all
exact numbers are serialized as decimal integer strings or "p/q"
fraction strings, never as floats, so documents diff cleanly across
platforms.  Exit codes: 0 success/certified, 1 refuted (or a failed
37-term check), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .certify import InsufficientSamples, certify, fit_quasipoly, soundness_probe
from .closedform import ExprSyntaxError, expr_eval, parse
from .genfunc import EmptyParts, RationalGF
from .polynomial import Poly
from .triangles import (
    andrews_expr,
    count_bruteforce,
    list_triangles,
    triangle_gf,
)

SCHEMA_VERSION = "1"
PROBE_N_MAX = 100000


# -- argument helpers ---------------------------------------------------


def _parts_arg(text: str) -> list[int]:
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not parts:
        raise argparse.ArgumentTypeError("parts must be non-empty")
    if any(b < 1 for b in parts):
        raise argparse.ArgumentTypeError(f"part sizes must be positive, got {text!r}")
    return parts


def _int_list_arg(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _pos_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_format_flag(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _add_gf_flags(p: argparse.ArgumentParser):
    p.add_argument("--parts", type=_parts_arg, required=True,
                   help="denominator part sizes, e.g. 2,3,4")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--shift", type=_nonneg_arg,
                       help="numerator q^shift")
    group.add_argument("--num", type=_int_list_arg,
                       help="numerator coefficients c0,c1,... (low to high)")


def _gf_from_args(args) -> RationalGF:
    if args.num is not None:
        return RationalGF(Poly(*args.num), args.parts)
    return RationalGF.from_parts(args.parts, shift=args.shift)


def _gf_inputs(args) -> dict:
    return {
        "parts": [str(b) for b in args.parts],
        "shift": None if args.shift is None else str(args.shift),
        "numerator": None if args.num is None else [str(c) for c in args.num],
    }


# -- rendering ----------------------------------------------------------


def _emit_json(doc: dict):
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _emit_csv(rows: list[list[str]]):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _flatten_for_csv(doc: dict) -> list[list[str]]:
    rows = [["field", "value"]]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(value, list):
            rows.append([prefix, " ".join(str(v) for v in value)])
        elif isinstance(value, bool):
            rows.append([prefix, "true" if value else "false"])
        elif value is None:
            rows.append([prefix, ""])
        else:
            rows.append([prefix, str(value)])

    walk("", doc["result"])
    return rows


def _document(command: str, inputs: dict, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    }


# -- coeffs -------------------------------------------------------------


def _cmd_coeffs(args) -> int:
    gf = _gf_from_args(args)
    coeffs = gf.coeffs(args.upto)
    inputs = _gf_inputs(args)
    inputs["upto"] = str(args.upto)
    doc = _document("coeffs", inputs, {"coefficients": [str(c) for c in coeffs]})
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        rows = [["n", "coefficient"]]
        rows += [[str(n), str(c)] for n, c in enumerate(coeffs)]
        _emit_csv(rows)
    else:
        print(" ".join(str(c) for c in coeffs))
    return 0


# -- certify ------------------------------------------------------------


def _cmd_certify(args) -> int:
    gf = _gf_from_args(args)
    expr = parse(args.expr)
    cert = certify(gf, expr, onset_override=args.onset)
    probe = None
    if args.probe is not None and cert.certified:
        agreed = soundness_probe(cert, args.probe, PROBE_N_MAX, seed=args.seed)
        probe = {
            "probes": str(args.probe),
            "n_max": str(PROBE_N_MAX),
            "seed": str(args.seed),
            "agreed": agreed,
        }
    inputs = _gf_inputs(args)
    inputs["expr"] = args.expr
    inputs["onset"] = None if args.onset is None else str(args.onset)
    result = {
        "verdict": "certified" if cert.certified else "refuted",
        "degree_bound": str(cert.degree_bound),
        "period": str(cert.period),
        "onset": str(cert.onset),
        "window": {
            "start": str(cert.window.start),
            "stop": str(cert.window.stop),
            "checks": str(len(cert.window)),
        },
        "witness": None if cert.certified else {
            "n": str(cert.refutation.n),
            "lhs": str(cert.refutation.lhs),
            "rhs": str(cert.refutation.rhs),
        },
        "probe": probe,
    }
    doc = _document("certify", inputs, result)
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        _emit_csv(_flatten_for_csv(doc))
    else:
        print(f"verdict: {result['verdict']}")
        print(f"degree bound: {cert.degree_bound}")
        print(f"period: {cert.period}")
        print(f"onset: {cert.onset}")
        print(f"window: [{cert.window.start}, {cert.window.stop}) ({len(cert.window)} checks)")
        if not cert.certified:
            w = cert.refutation
            print(f"witness: n={w.n} lhs={w.lhs} rhs={w.rhs}")
        if probe is not None:
            verdict = "agreed" if probe["agreed"] else "DISAGREED"
            print(f"probe: {probe['probes']} probes up to n={probe['n_max']} "
                  f"(seed {probe['seed']}): {verdict}")
    return 0 if cert.certified else 1


# -- triangles ----------------------------------------------------------


def _cmd_triangles_count(args) -> int:
    count = count_bruteforce(args.perimeter)
    inputs = {"perimeter": str(args.perimeter)}
    doc = _document("triangles count", inputs, {"count": str(count)})
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        _emit_csv([["perimeter", "count"], [str(args.perimeter), str(count)]])
    else:
        print(count)
    return 0


def _cmd_triangles_list(args) -> int:
    tris = list_triangles(args.perimeter)
    inputs = {"perimeter": str(args.perimeter)}
    result = {
        "count": str(len(tris)),
        "triangles": [[str(t.x), str(t.y), str(t.z)] for t in tris],
    }
    doc = _document("triangles list", inputs, result)
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        rows = [["x", "y", "z"]]
        rows += [[str(t.x), str(t.y), str(t.z)] for t in tris]
        _emit_csv(rows)
    else:
        for t in tris:
            print(f"({t.x},{t.y},{t.z})")
    return 0


# -- fit ----------------------------------------------------------------


def _read_values(args) -> list[int]:
    if args.stdin:
        text = sys.stdin.read()
    else:
        with open(args.values, "r", encoding="ascii") as fh:
            text = fh.read()
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ValueError(f"values must be whitespace-separated integers: {exc}")


def _cmd_fit(args) -> int:
    samples = _read_values(args)
    fit = fit_quasipoly(samples, d_max=args.dmax, l_max=args.lmax, holdout=args.holdout)
    inputs = {
        "dmax": str(args.dmax),
        "lmax": str(args.lmax),
        "holdout": str(args.holdout),
        "samples": str(len(samples)),
    }
    constituents = [[str(c) for c in p.coeffs] or ["0"] for p in fit.model.constituents]
    result = {
        "period": str(fit.period),
        "degree": str(fit.degree),
        "holdout_verified": fit.holdout_verified,
        "samples_used": str(fit.samples_used),
        "constituents": {str(r): cs for r, cs in enumerate(constituents)},
    }
    doc = _document("fit", inputs, result)
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        _emit_csv(_flatten_for_csv(doc))
    else:
        print(f"period: {fit.period}")
        print(f"degree: {fit.degree}")
        print(f"holdout_verified: {'true' if fit.holdout_verified else 'false'}")
        print(f"samples_used: {fit.samples_used}")
        for r, cs in enumerate(constituents):
            print(f"constituent {r}: {' '.join(cs)}")
    return 0


# -- paper --------------------------------------------------------------


def _cmd_paper(args) -> int:
    gf = triangle_gf()
    expr = andrews_expr()
    coeffs = gf.coeffs(36)
    formula = [expr_eval(expr, n) for n in range(37)]
    equal = coeffs == formula
    result = {
        "upto": "36",
        "coefficients": [str(c) for c in coeffs],
        "formula": [str(v) for v in formula],
        "equal": equal,
    }
    doc = _document("paper", {}, result)
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        rows = [["n", "coefficient", "formula"]]
        rows += [[str(n), str(c), str(v)] for n, (c, v) in enumerate(zip(coeffs, formula))]
        _emit_csv(rows)
    else:
        print(" n  coefficient  formula")
        for n, (c, v) in enumerate(zip(coeffs, formula)):
            print(f"{n:2d}  {c:11d}  {v:7d}")
        print("true" if equal else "false")
    return 0 if equal else 1


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpcert",
        description="Certify identities between rational generating function "
                    "coefficients and closed-form quasi-polynomial expressions, "
                    "with exact arithmetic throughout.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print power-series coefficients")
    _add_gf_flags(p)
    p.add_argument("--upto", type=_nonneg_arg, required=True, help="last index N")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("certify", help="prove or refute coefficients == expression")
    _add_gf_flags(p)
    p.add_argument("--expr", required=True, help="closed-form expression in n")
    p.add_argument("--onset", type=_nonneg_arg, default=None,
                   help="claim the identity only for n >= onset")
    p.add_argument("--probe", type=_nonneg_arg, default=None, metavar="K",
                   help=f"after certifying, cross-check K random indices up to {PROBE_N_MAX}")
    p.add_argument("--seed", type=int, default=0, help="probe RNG seed")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("triangles", help="integer-sided triangles by perimeter")
    tsub = p.add_subparsers(dest="subcommand", required=True)
    pc = tsub.add_parser("count", help="count triangles of a perimeter")
    pc.add_argument("--perimeter", type=_nonneg_arg, required=True)
    _add_format_flag(pc)
    pc.set_defaults(handler=_cmd_triangles_count)
    pl = tsub.add_parser("list", help="list triangles of a perimeter")
    pl.add_argument("--perimeter", type=_nonneg_arg, required=True)
    _add_format_flag(pl)
    pl.set_defaults(handler=_cmd_triangles_list)

    p = sub.add_parser("fit", help="fit a quasi-polynomial ansatz to samples")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--values", help="file of whitespace-separated integers")
    group.add_argument("--stdin", action="store_true", help="read samples from stdin")
    p.add_argument("--dmax", type=_nonneg_arg, required=True, help="max degree to try")
    p.add_argument("--lmax", type=_pos_arg, required=True, help="max period to try")
    p.add_argument("--holdout", type=_pos_arg, default=1,
                   help="minimum samples kept unseen by every candidate")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_fit)

    p = sub.add_parser("paper", help="run the classic 37-term check of the "
                                     "triangle-count identity")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_paper)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ExprSyntaxError, InsufficientSamples, EmptyParts, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
