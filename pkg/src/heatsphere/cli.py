"""Command-line surface.

Three subcommands: `compute` emits coefficient records as JSON lines or
CSV, `verify` runs one of the exact verification sweeps, `asympt` runs the
numeric remainder-order cross-check.  Exit codes: 0 success, 1 a
verification or deviation failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import asymptotics, identities, invariants, legendre, opercalc
from .verification import VerificationReport

_VERIFY_TARGETS = (
    "s1",
    "s1g",
    "s3",
    "vychet",
    "lemmas",
    "bernoulli-link",
    "legendre",
    "crosscheck",
    "omega-stability",
    "sharpness",
)

CSV_HEADER = ["n", "d", "omega", "route", "num", "den", "pi_half", "float"]


def _parse_range(text: str) -> list[int]:
    """"3" -> [3]; "1..8" -> [1, 2, ..., 8]."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO..HI, got {text!r}") from None


def _parse_rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _record_dict(result: invariants.HeatInvariantResult) -> dict:
    value = result.value
    record = {
        "n": result.n,
        "d": result.d,
        "omega_used": result.omega_used,
        "route": result.route,
        "value": {
            "num": str(value.coeff.numerator),
            "den": str(value.coeff.denominator),
            "pi_half": value.pi_half,
        },
        "float_value": float(value),
    }
    return record


def cmd_compute(args: argparse.Namespace) -> int:
    if args.omega is not None and args.formula not in ("auto", "general"):
        print(f"error: --omega is incompatible with --formula {args.formula}", file=sys.stderr)
        return 2
    results = [
        invariants.heat_invariant(n, d, omega=args.omega, formula=args.formula)
        for n in args.n
        for d in args.d
    ]
    if args.format == "json":
        for result in results:
            print(json.dumps(_record_dict(result)))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_HEADER)
        for result in results:
            value = result.value
            writer.writerow(
                [
                    result.n,
                    result.d,
                    "" if result.omega_used is None else result.omega_used,
                    result.route,
                    value.coeff.numerator,
                    value.coeff.denominator,
                    value.pi_half,
                    repr(float(value)),
                ]
            )
    return 0


def _span(values: list[int]) -> tuple[int, int]:
    return (min(values), max(values))


def _run_verify(args: argparse.Namespace) -> VerificationReport:
    target = args.target
    if target in ("s1", "s1g", "s3"):
        box: dict = {}
        if args.n is not None:
            box["n"] = _span(args.n)
        if args.offset is not None:
            box["offset"] = _span(args.offset)
        if target == "s1g" and args.x is not None:
            box["x"] = args.x
        return identities.verify_identity(target, box)
    if target == "vychet":
        box = {}
        if args.j_max is not None:
            box["j_max"] = args.j_max
        return identities.verify_identity(target, box)
    if target == "lemmas":
        return opercalc.verify_lemmas(
            t_max=4 if args.t_max is None else args.t_max,
            s_max=3 if args.s_max is None else args.s_max,
            slack=3 if args.slack is None else args.slack,
        )
    if target == "bernoulli-link":
        return opercalc.check_bernoulli_link(8 if args.t_max is None else args.t_max)
    if target == "legendre":
        return legendre.verify_expansion(
            j_max=4 if args.j_max is None else args.j_max,
            d_range=_span(args.d or [2, 5]),
        )
    if target == "crosscheck":
        return invariants.verify_crosscheck(_span(args.n or [1, 8]), _span(args.d or [2, 11]))
    if target == "omega-stability":
        return invariants.verify_omega_stability(_span(args.n or [1, 6]), _span(args.d or [1, 8]))
    assert target == "sharpness"
    return invariants.verify_sharpness()


def cmd_verify(args: argparse.Namespace) -> int:
    report = _run_verify(args)
    if args.format == "json":
        print(json.dumps(report.as_dict()))
    else:
        box = ", ".join(f"{name} in {span}" for name, span in report.parameter_box)
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {report.identity_name}: {report.points_checked} points ({box})")
        for witness in report.failures:
            params = ", ".join(f"{k}={v}" for k, v in witness.parameters.items())
            print(f"  witness {params}: computed {witness.computed}, expected {witness.expected}")
        for note in report.notes:
            print(f"  note: {note}")
    return 0 if report.passed else 1


def cmd_asympt(args: argparse.Namespace) -> int:
    estimate = asymptotics.remainder_order(args.d, args.n_terms, args.t0)
    print(
        json.dumps(
            {
                "d": estimate.d,
                "n_terms": estimate.n_terms,
                "t_values": list(estimate.t_values),
                "observed_order": estimate.observed_order,
                "expected_order": estimate.expected_order,
                "relative_deviation": estimate.relative_deviation,
                "status": estimate.status,
            }
        )
    )
    if estimate.status == "ok" and estimate.relative_deviation > args.max_dev:
        return 1
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heatsphere",
        description="Exact heat-trace coefficients of round spheres and their verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute coefficients a(n, d)")
    compute.add_argument("--n", type=_parse_range, required=True, metavar="INT|LO..HI")
    compute.add_argument("--d", type=_parse_range, required=True, metavar="INT|LO..HI")
    compute.add_argument("--omega", type=int, default=None)
    compute.add_argument(
        "--formula",
        choices=("auto", "general", "odd", "even", "closed"),
        default="auto",
    )
    compute.add_argument("--format", choices=("json", "csv"), default="json")
    compute.set_defaults(func=cmd_compute)

    verify = sub.add_parser("verify", help="run an exact verification sweep")
    verify.add_argument("target", choices=_VERIFY_TARGETS)
    verify.add_argument("--n", type=_parse_range, default=None, metavar="INT|LO..HI")
    verify.add_argument("--d", type=_parse_range, default=None, metavar="INT|LO..HI")
    verify.add_argument(
        "--offset",
        type=_parse_range,
        default=None,
        metavar="INT|LO..HI",
        help="omega = 2n + offset (negative offsets probe below the bound)",
    )
    verify.add_argument("--x", type=_parse_rationals, default=None, metavar="Q[,Q...]")
    verify.add_argument("--j-max", dest="j_max", type=int, default=None)
    verify.add_argument("--t-max", dest="t_max", type=int, default=None)
    verify.add_argument("--s-max", dest="s_max", type=int, default=None)
    verify.add_argument("--slack", type=int, default=None)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    asympt = sub.add_parser("asympt", help="numeric remainder-order cross-check")
    asympt.add_argument("--d", type=int, required=True)
    asympt.add_argument("--n-terms", dest="n_terms", type=int, required=True)
    asympt.add_argument("--t0", type=float, default=0.05)
    asympt.add_argument("--max-dev", dest="max_dev", type=float, default=0.2)
    asympt.set_defaults(func=cmd_asympt)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ValueError, asymptotics.TruncationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
