"""Command-line front end: ``subfield-codes <command> --family {c1|c2} --p P [--m M]``."""

from __future__ import annotations

import argparse
import sys

from . import code, report
from .charsums import gauss_sum_closed, gauss_sum_numeric
from .constructions import build, closed_form_wd, expected_claims
from .field import DomainError, FieldError, make_field
from .verify import verify_family

COMMANDS = ("wd", "verify", "dual", "claims", "gauss", "field-info")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subfield-codes",
        description="Weight distributions and dual parameters of the C1/C2 subfield codes.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--family", choices=("c1", "c2"), default="c1")
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--m", type=int, default=None,
                        help="extension degree (default 1 for c1, 2 for c2)")
    parser.add_argument("--format", choices=report.FORMATS, default="table")
    parser.add_argument("--budget", type=int, default=code.DEFAULT_BUDGET,
                        help="maximum number of codewords / search steps to enumerate")
    parser.add_argument("--threads", type=int, default=1)
    return parser


def _gauss_text(p: int, m: int, fmt: str) -> str:
    fld = make_field(p, m)
    closed, numeric = gauss_sum_closed(fld), gauss_sum_numeric(fld)
    payload = {"p": p, "m": m, "closed_re": round(closed.real, 12), "closed_im": round(closed.imag, 12),
               "numeric_re": round(numeric.real, 12), "numeric_im": round(numeric.imag, 12),
               "abs_diff": float(f"{abs(closed - numeric):.3e}")}
    if fmt == "json":
        return report.dumps(payload) + "\n"
    if fmt == "csv":
        return report._csv([("key", "value"), *payload.items()])
    return report._key_values(list(payload.items()))


def _field_info_text(p: int, m: int, fmt: str) -> str:
    fld = make_field(p, m)
    payload = {"p": p, "m": m, "q": fld.q, "modulus": list(fld.modulus),
               "generator": list(fld.generator.coeffs)}
    if fmt == "json":
        return report.dumps(payload) + "\n"
    pairs = [(k, " ".join(map(str, v)) if isinstance(v, list) else v) for k, v in payload.items()]
    if fmt == "csv":
        return report._csv([("key", "value"), *pairs])
    return report._key_values(pairs)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    m = args.m if args.m is not None else (2 if args.family == "c2" else 1)
    out = sys.stdout
    try:
        if args.command == "gauss":
            out.write(_gauss_text(args.p, m, args.format))
            return EXIT_OK
        if args.command == "field-info":
            out.write(_field_info_text(args.p, m, args.format))
            return EXIT_OK
        if args.command == "wd":
            wd = closed_form_wd(args.family, args.p, m)
            out.write(report.emit(wd, args.format, family=args.family, m=m))
            return EXIT_OK
        if args.command == "claims":
            out.write(report.emit(expected_claims(args.family, args.p, m), args.format))
            return EXIT_OK
        if args.command == "dual":
            expanded = code.subfield_expand(build(args.family, args.p, m))
            wd = code.weight_distribution(expanded, budget=args.budget, threads=args.threads)
            out.write(report.emit(code.dual_report(wd), args.format))
            return EXIT_OK
        rep = verify_family(args.family, args.p, m, budget=args.budget, threads=args.threads)
        out.write(report.emit(rep, args.format))
        return EXIT_OK if rep.passed else EXIT_MISMATCH
    except code.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
