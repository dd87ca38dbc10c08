"""Command line front end: ``zetaforge count|zeta|verify|lseries``.

Reports are JSON with sorted keys and coefficient arrays lowest degree
first.  Exit codes: 2 bad input, 3 budget exceeded, 4 no zeta fit,
5 a Weil check failed, 6 singular curve.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from fractions import Fraction
from importlib import resources

import jsonschema

from . import __version__
from .counting import (
    CountSeries,
    PolynomialTerm,
    VarietySpec,
    closed_point_degrees,
    count_elliptic,
    count_series,
    default_budget,
    weierstrass_spec,
)
from .errors import (
    BudgetExceeded,
    NoRationalFit,
    NonIntegralSolution,
    SingularCurve,
    ZetaForgeError,
)
from .field import construct_field
from .hasse_weil import IntegerCurve, dirichlet_expand, local_factors
from .weil import weil_report
from .zeta import RationalZeta, curve_numerator_from_counts, reconstruct_rational

EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_NOFIT = 4
EXIT_VERIFY = 5
EXIT_SINGULAR = 6


class InputError(Exception):
    pass


def load_schema(name: str) -> dict:
    text = resources.files("zetaforge").joinpath("schemas", f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def _read_json(path: str, schema: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        jsonschema.validate(doc, load_schema(schema))
    except (OSError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return doc


def parse_spec(doc: dict) -> tuple[VarietySpec, dict]:
    """Turn a validated spec document into a VarietySpec plus hints."""
    p, n = doc["field"]["p"], doc["field"].get("n", 1)
    try:
        base = construct_field(p, n)
    except ZetaForgeError as exc:
        raise InputError(str(exc)) from exc
    hints = {k: doc[k] for k in ("genus", "dim", "curve") if k in doc}
    label = doc.get("label", "")
    amb = doc["ambient"]
    if "curve" in doc and not doc.get("equations"):
        c = doc["curve"]
        if amb != {"type": "projective", "vars": 3}:
            raise InputError("elliptic curve specs use projective coordinates (x, y, z)")
        return weierstrass_spec(c["a"], c["b"], base, label), hints
    eqs = []
    for eq in doc.get("equations", []):
        terms = []
        for t in eq["terms"]:
            if len(t["e"]) != amb["vars"]:
                raise InputError(f"exponent vector {t['e']} does not have {amb['vars']} entries")
            terms.append(PolynomialTerm(t["c"], tuple(t["e"])))
        eqs.append(tuple(terms))
    try:
        spec = VarietySpec(amb["type"], amb["vars"], tuple(eqs), base, label)
    except ZetaForgeError as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return spec, hints


def _counts(spec: VarietySpec, hints: dict, k: int, args) -> tuple[CountSeries, str]:
    curve = hints.get("curve")
    if curve and spec.base.p > 3:
        out = []
        for j in range(1, k + 1):
            ext = construct_field(spec.base.p, spec.base.n * j)
            out.append(count_elliptic(curve["a"], curve["b"], ext))
        return CountSeries(spec.q, tuple(out)), "elliptic"
    series = count_series(spec, k, method=args.method, budget=args.budget, workers=args.threads)
    return series, args.method


def _base_report(command: str, spec: VarietySpec | None = None) -> dict:
    doc = {"schema_version": 1, "tool": {"name": "zetaforge", "version": __version__}, "command": command}
    if spec is not None:
        doc["label"] = spec.label
        doc["field"] = {"p": spec.base.p, "n": spec.base.n}
        doc["q"] = spec.q
        if spec.ambient == "projective" and spec.equations and spec.is_homogeneous():
            doc["notes"] = ["counts are of the projective scheme as written, not of a smooth model"]
    return doc


def _dimension(spec: VarietySpec, hints: dict, override) -> int:
    if override is not None:
        return override
    if "dim" in hints:
        return hints["dim"]
    return max(spec.r - len(spec.equations), 0)


def _fit_zeta(spec, hints, args) -> tuple[CountSeries, RationalZeta, dict, str]:
    genus = args.genus if args.genus is not None else None
    if genus is None and args.num_deg is None and args.den_deg is None:
        genus = hints.get("genus")
    if genus is not None:
        k = max(genus, args.ext_max or 0, 1)
        series, counter = _counts(spec, hints, k, args)
        P = curve_numerator_from_counts(genus, spec.q, series.counts)
        Z = RationalZeta.make(P, [1, -(1 + spec.q), spec.q])
        info = {"method": "functional-equation", "genus": genus}
    else:
        a = 2 if args.num_deg is None else args.num_deg
        b = 2 if args.den_deg is None else args.den_deg
        k = max(a + b + 2, args.ext_max or 0)
        series, counter = _counts(spec, hints, k, args)
        Z = reconstruct_rational(series, a, b)
        info = {"method": "recurrence", "caps": [a, b]}
    return series, Z, info, counter


def cmd_count(args) -> dict:
    spec, hints = parse_spec(_read_json(args.spec, "spec"))
    series, counter = _counts(spec, hints, args.ext_max or 3, args)
    doc = _base_report("count", spec)
    doc["counts"] = list(series.counts)
    doc["closed_points"] = closed_point_degrees(series)
    doc["counter"] = counter
    return doc


def cmd_zeta(args) -> dict:
    spec, hints = parse_spec(_read_json(args.spec, "spec"))
    series, Z, info, counter = _fit_zeta(spec, hints, args)
    doc = _base_report("zeta", spec)
    doc["dim"] = _dimension(spec, hints, args.dim)
    doc["counts"] = list(series.counts)
    doc["counter"] = counter
    doc["zeta"] = {**Z.to_json(), **info}
    return doc


def _coeff(c):
    return Fraction(c) if isinstance(c, str) else c


def cmd_verify(args) -> dict:
    try:
        with open(args.input, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.input}: {exc}") from exc
    if isinstance(raw, dict) and "zeta" in raw:
        doc_in = _read_json(args.input, "zeta")
        Z = RationalZeta.make([_coeff(c) for c in doc_in["zeta"]["num"]], [_coeff(c) for c in doc_in["zeta"]["den"]])
        q = doc_in["q"]
        d = args.dim if args.dim is not None else doc_in.get("dim", 1)
        counts = doc_in.get("counts")
        doc = _base_report("verify")
        doc["q"] = q
        fit = {"source": "zeta document"}
    else:
        spec, hints = parse_spec(_read_json(args.input, "spec"))
        series, Z, fit, counter = _fit_zeta(spec, hints, args)
        counts = list(series.counts)
        q = spec.q
        d = _dimension(spec, hints, args.dim)
        doc = _base_report("verify", spec)
        doc["counter"] = counter
    report = weil_report(Z, d, q, counts=counts, fit=fit, expected_betti=args.expected_betti)
    doc["dim"] = d
    if counts is not None:
        doc["counts"] = list(counts)
    doc["zeta"] = Z.to_json()
    doc["weil"] = report.to_json()
    doc["failed"] = report.failed
    return doc


def cmd_lseries(args) -> dict:
    curve = IntegerCurve(args.a, args.b)
    factors = local_factors(curve, max(args.pmax, args.nmax))
    coeffs = dirichlet_expand(factors, args.nmax)
    doc = _base_report("lseries")
    doc["lseries"] = {
        "a": args.a,
        "b": args.b,
        "discriminant": curve.discriminant,
        "primes": [
            {"p": f.p, "status": f.status, **({"a_p": f.a_p} if f.good else {})}
            for f in factors.values()
            if f.p <= args.pmax
        ],
        "coefficients": coeffs,
    }
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["n", "a_n"])
            w.writerows([n, a] for n, a in enumerate(coeffs, start=1))
    if args.roots_csv:
        with open(args.roots_csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["p", "a_p", "angle"])
            for f in factors.values():
                if f.good and f.p <= args.pmax:
                    w.writerow([f.p, f.a_p, f"{math.acos(f.a_p / (2 * math.sqrt(f.p))):.12f}"])
    return doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetaforge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"zetaforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec_arg="spec"):
        p.add_argument(spec_arg)
        p.add_argument("--ext-max", type=int, default=None, help="count over GF(q^n) for n up to this")
        p.add_argument("--budget", type=int, default=None, help="max candidate tuples per extension")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--method", choices=["auto", "enumerate", "charsum"], default="auto")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--no-timing", action="store_true", help="omit the timing block")

    def fit_opts(p):
        p.add_argument("--num-deg", type=int, default=None)
        p.add_argument("--den-deg", type=int, default=None)
        p.add_argument("--genus", type=int, default=None)
        p.add_argument("--dim", type=int, default=None)

    common(sub.add_parser("count", help="point counts and closed points"))
    p = sub.add_parser("zeta", help="zeta function as a rational function")
    common(p)
    fit_opts(p)
    p = sub.add_parser("verify", help="check W1-W5 on a spec or a zeta document")
    common(p, "input")
    fit_opts(p)
    p.add_argument("--expected-betti", type=lambda s: [int(x) for x in s.split(",")], default=None)
    p = sub.add_parser("lseries", help="Hasse-Weil coefficients of y^2 = x^3 + ax + b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--pmax", type=int, default=100)
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--csv", default=None)
    p.add_argument("--roots-csv", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--no-timing", action="store_true")
    return parser


COMMANDS = {"count": cmd_count, "zeta": cmd_zeta, "verify": cmd_verify, "lseries": cmd_lseries}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    start = time.perf_counter()
    try:
        doc = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"zetaforge: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"zetaforge: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NoRationalFit, NonIntegralSolution) as exc:
        print(f"zetaforge: {exc}", file=sys.stderr)
        return EXIT_NOFIT
    except SingularCurve as exc:
        print(f"zetaforge: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ZetaForgeError as exc:
        print(f"zetaforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if not args.no_timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    jsonschema.validate(doc, load_schema("report"))
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if doc.get("failed"):
        return EXIT_VERIFY
    return 0
