"""
Command-line front end.

    semiring-atlas classify --coeffs 1,-3,5,-8 --json
    semiring-atlas scan x3-ax2+bx-c --a 1..6 --b 1..6 --c 1..6 --out grid.csv
    semiring-atlas verify-paper

Coefficients are given leading first (descending), unlike the library's ascending
storage. Exit codes: 0 success (including undecided results), 1 contradiction or
mismatch, 2 bad arguments, 3 unsupported input.
"""
from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import __version__
from .cubicatlas import SHAPES, CubicDisagreementError, ScanRow, cross_check, scan, scan_instances
from .exactpoly import (
    IntPolynomial,
    ParseError,
    PolynomialError,
    parse_canonical,
    parse_human,
    rational_root_screen,
)
from .genengine import NMAX_ENV, CertificateKind, ClassificationReport, Generation, classify, default_n_max
from .oracle import OracleRefusal, brute_force_tail, numeric_sanity, verify_witness
from .realroots import is_weak_perron, unique_positive_root

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _metadata(args: argparse.Namespace, command: str) -> None:
    if not args.reproducible:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
        print(f"# semiring-atlas {__version__} {command} {stamp}", file=sys.stderr)


def _read_poly(args: argparse.Namespace) -> IntPolynomial:
    if args.poly is not None:
        return parse_human(args.poly)
    return parse_canonical(args.coeffs)


# ---------------------------------------------------------------------------
# classify


def oracle_check(report: ClassificationReport, max_n: int = 8) -> dict:
    """Re-derive feasibility at every n in [d, sigma] by brute force."""
    m = report.primitive_form
    if report.generation is not Generation.FINITELY_GENERATED or report.degree < 2:
        return {"status": "skipped", "reason": "only finitely generated cases of degree >= 2 are checked"}
    if report.sigma > max_n:
        return {"status": "skipped", "reason": f"sigma > {max_n}"}
    witness = report.certificate(CertificateKind.TAIL_WITNESS_FOUND).payload
    per_n = {}
    agree = True
    try:
        for n in range(report.degree, report.sigma + 1):
            tails = brute_force_tail(m, report.alpha, n)
            per_n[str(n)] = len(tails)
            if (n < report.sigma) == bool(tails):
                agree = False
    except OracleRefusal as exc:
        return {"status": "refused", "volume": exc.volume, "limit": exc.limit}
    canonical = list(tails[0]) if tails else None
    agree = agree and canonical == witness["tail"]
    H = IntPolynomial.parse(witness["product"])
    return {
        "status": "agree" if agree else "disagree",
        "solutions_per_n": per_n,
        "canonical_tail": canonical,
        "verify_witness": verify_witness(m, H),
        "numeric_sanity": numeric_sanity(m, H, alpha=report.alpha),
    }


def cmd_classify(args: argparse.Namespace) -> int:
    _metadata(args, "classify")
    f = _read_poly(args)
    report = classify(f, args.nmax)
    payload = report.to_dict()
    code = EXIT_OK
    if args.oracle:
        check = oracle_check(report)
        payload["extensions"] = dict(payload["extensions"], oracle=check)
        if check["status"] == "disagree" or check.get("verify_witness") is False \
                or check.get("numeric_sanity") is False:
            code = EXIT_MISMATCH
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return code
    print(report.summary())
    if report.alpha is not None:
        print(f"  alpha ~ {payload['alpha']['decimal']}  in ({payload['alpha']['lo']}, {payload['alpha']['hi']}]")
    if report.atom_count_kind == "exact":
        print(f"  atoms: {report.atom_count}")
    elif report.atom_count_kind == "lower_bound":
        print(f"  atoms: at least {report.atom_count}")
    else:
        print(f"  atoms: {report.atom_count_kind}")
    for cert in report.certificates:
        print(f"  {cert.kind.value}: {json.dumps(cert.payload, sort_keys=True)}")
    if args.oracle:
        print(f"  oracle: {json.dumps(payload['extensions']['oracle'], sort_keys=True)}")
    return code


# ---------------------------------------------------------------------------
# scan


def parse_range(text: str) -> list[int]:
    """'1..6', '4', or '1,3,5'."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use LO..HI or a comma list") from None


def cmd_scan(args: argparse.Namespace) -> int:
    _metadata(args, "scan")
    for name in ("a", "b", "c"):
        values = getattr(args, name)
        if not values:
            print(f"error: empty range for --{name}", file=sys.stderr)
            return EXIT_USAGE
        if min(values) < 1:
            print(f"error: --{name} values must be positive", file=sys.stderr)
            return EXIT_USAGE
    shapes = list(SHAPES) if args.shape == "all" else [args.shape]
    forms = scan_instances(shapes, args.a, args.b, args.c)
    results = scan(forms, args.nmax, jobs=args.jobs)
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(ScanRow.FIELDS)
    for row, _ in results:
        writer.writerow([str(v).lower() if isinstance(v, bool) else v for v in row.as_list()])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    bad = [r for r, _ in results if not r.agrees]
    if bad:
        print(f"error: {len(bad)} rule/engine disagreements", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper


@dataclass
class Check:
    id: str
    label: str
    expected: str
    run: Callable[[Optional[int]], str]


def _p(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial.from_descending(coeffs)


def _fg_sigma(m: IntPolynomial, n_max: Optional[int]) -> str:
    r = classify(m, n_max)
    if r.generation is not Generation.FINITELY_GENERATED:
        return r.generation.value
    return f"sigma={r.sigma} atoms={r.atom_count} {r.factorization_class.value}"


def _atoms5_family(p: int, n_max: Optional[int]) -> str:
    m = _p([1, 1, -p, -2 * p])
    quintic = _p([1, 0, 1 - p, 2 - p, 0, -4 * p])
    r = classify(m, n_max)
    return f"sigma={r.sigma} quintic={'ok' if verify_witness(m, quintic) else 'rejected'}"


def _perron_negative(b: int, n_max: Optional[int]) -> str:
    m = _p([1, 1, -b, -2])
    rational = rational_root_screen(m)
    if rational:
        return "reducible, rational roots " + ",".join(str(r) for r in rational)
    wp = is_weak_perron(unique_positive_root(m), method="general").is_weak_perron
    return f"weak_perron={str(wp).lower()} {classify(m, n_max).generation.value}"


def _perron_coef(p: int, n_max: Optional[int]) -> str:
    m = _p([1, -1, p, -2 * p * p])
    v = cross_check(m, n_max)
    wp = is_weak_perron(unique_positive_root(m), method="general").is_weak_perron
    return f"{v.generation.value} rule={v.rule_applied} weak_perron={str(wp).lower()}"


def _atomicity(m: IntPolynomial, n_max: Optional[int]) -> str:
    r = classify(m, n_max)
    return f"{r.atomicity.value} {r.generation.value}"


def reference_checks(p_values: Optional[list[int]] = None, b_values: Optional[list[int]] = None,
                 p_coef_values: Optional[list[int]] = None) -> list[Check]:
    p_family = p_values or [5, 7, 11, 13, 17]
    p_coef = p_coef_values or p_values or [3, 5, 7, 11]
    b_range = b_values or list(range(4, 13))
    checks = [
        Check("atoms5", "x^3-3x^2+5x-8", "sigma=5 atoms=5 NotLFM",
              lambda n: _fg_sigma(_p([1, -3, 5, -8]), n)),
        Check("atoms7", "x^3-2x^2+5x-20", "sigma=7 atoms=7 NotLFM",
              lambda n: _fg_sigma(_p([1, -2, 5, -20]), n)),
    ]
    for p in p_family:
        checks.append(Check("atoms5-family", f"x^3+x^2-{p}x-{2 * p}", "sigma=5 quintic=ok",
                            lambda n, p=p: _atoms5_family(p, n)))
    for b in b_range:
        checks.append(Check("perron-negative", f"x^3+x^2-{b}x-2", "weak_perron=false infinitely_generated",
                            lambda n, b=b: _perron_negative(b, n)))
    for p in p_coef:
        checks.append(Check("perron-coef-family", f"x^3-x^2+{p}x-{2 * p * p}",
                            "infinitely_generated rule=perron-coef-fail weak_perron=false",
                            lambda n, p=p: _perron_coef(p, n)))
    for label, coeffs, expected in [
        ("x^2+x-1", [1, 1, -1], "antimatter infinitely_generated"),
        ("x^3+x^2+x-1", [1, 1, 1, -1], "antimatter infinitely_generated"),
        ("x^3+2x^2-5", [1, 2, 0, -5], "atomic infinitely_generated"),
    ]:
        checks.append(Check("antimatter", label, expected, lambda n, c=coeffs: _atomicity(_p(c), n)))
    return checks


CHECK_IDS = ("atoms5", "atoms7", "atoms5-family", "perron-negative", "perron-coef-family", "antimatter")


def cmd_verify_paper(args: argparse.Namespace) -> int:
    _metadata(args, "verify-paper")
    checks = reference_checks(args.p, args.b, args.p)
    if args.only:
        checks = [c for c in checks if c.id in args.only]
    failures = 0
    width = max(len(c.label) for c in checks)
    print(f"{'status':<6}  {'id':<18}  {'instance':<{width}}  expected | computed")
    for check in checks:
        try:
            got = check.run(args.nmax)
        except (PolynomialError, CubicDisagreementError, AssertionError) as exc:
            got = f"error: {exc}"
        ok = got == check.expected
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL':<6}  {check.id:<18}  {check.label:<{width}}  {check.expected} | {got}")
    print(f"{len(checks) - failures}/{len(checks)} passed")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    return parse_range(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiring-atlas",
                                     description="Classify N0[alpha] for a positive algebraic alpha.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--nmax", type=int, default=None,
                       help="largest n searched (default: degree+21, or $SEMIRING_ATLAS_NMAX)")
        p.add_argument("--reproducible", action="store_true",
                       help="suppress the timestamped metadata line on stderr")

    p = sub.add_parser("classify", help="classify one polynomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='human form, e.g. "x^3-3x^2+5x-8"')
    src.add_argument("--coeffs", help="descending coefficients, e.g. 1,-3,5,-8")
    p.add_argument("--json", action="store_true", help="emit the full report as JSON")
    p.add_argument("--oracle", action="store_true", help="cross-check the search by brute force")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="scan a grid of monic cubics, CSV output")
    p.add_argument("shape", choices=[*SHAPES, "all"])
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=parse_range, default=list(range(1, 7)), help="LO..HI (default 1..6)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="reproduce the built-in table of reference values")
    p.add_argument("--only", nargs="+", choices=CHECK_IDS)
    p.add_argument("--p", type=_int_list, help="parameter list for the p-families")
    p.add_argument("--b", type=_int_list, help="parameter list for perron-negative")
    common(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.nmax is None:
        try:
            default_n_max(0)
        except ValueError:
            print(f"error: {NMAX_ENV} must be an integer", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolynomialError as exc:
        print(f"error: unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (AssertionError, CubicDisagreementError) as exc:
        print(f"error: internal contradiction: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
