"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bezout, document, selftest
from .arith import ENV_BOUND
from .cyclotomic import METHODS
from .errors import CyclobezError, InputError, InvariantBreach
from .intpoly import to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BREACH = 0, 1, 2, 3


def cmd_phi(args, out):
    f = METHODS[args.method](args.n)
    if args.format == "text":
        out.write(to_text(f) + "\n")
    elif args.format == "coeffs":
        out.write(" ".join(map(str, f.coeffs)) + "\n")
    else:
        out.write(json.dumps({"n": args.n, "coeffs": document.coeff_strings(f)}) + "\n")
    return EXIT_OK


def describe_class(cls) -> str:
    if isinstance(cls, bezout.DivisorQuotientPrimePower):
        return f"divisor quotient={cls.q}={cls.p}^{cls.t}"
    if isinstance(cls, bezout.DivisorQuotientNotPrimePower):
        return f"divisor quotient={cls.q}"
    return "non-divisor"


def cmd_k(args, out):
    cls = bezout.classify_pair(args.m, args.n)
    out.write(f"{describe_class(cls)} k={bezout.minimal_k(args.m, args.n)}\n")
    return EXIT_OK


def cmd_cert(args, out):
    cert = bezout.certificate(args.m, args.n, method=args.method)
    text = document.render(cert)
    if not bezout.verify(document.parse(text)):
        raise InvariantBreach("rendered certificate does not verify")
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    try:
        if args.path == "-":
            text = sys.stdin.read()
        else:
            with open(args.path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror}") from None
    cert = document.parse(text)
    if bezout.verify(cert):
        out.write(f"OK k={cert.k}\n")
        return EXIT_OK
    out.write("FAIL\n")
    return EXIT_FAIL


def cmd_selftest(args, out):
    results = selftest.run_all(args.max)
    for res in results:
        status = "ok" if res.ok else "FAILED"
        out.write(f"{res.name}: {res.checked} checked, {len(res.failures)} failed [{status}]\n")
        for label in res.failures[:10]:
            out.write(f"  failure: {label}\n")
    bad = sum(not r.ok for r in results)
    out.write("selftest passed\n" if not bad else f"selftest: {bad} suite(s) failed\n")
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_table(args, out):
    out.write("m,n,class,k\n")
    for m in range(2, args.max + 1):
        for n in range(1, m):
            cls = bezout.classify_pair(m, n)
            out.write(f"{m},{n},{cls.label},{bezout.minimal_k(m, n)}\n")
    return EXIT_OK


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclobez",
        description="Cyclotomic polynomials and minimal integer Bezout constants.",
        epilog=f"Index bound: set {ENV_BOUND} (default 1000000).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="print the n-th cyclotomic polynomial")
    p.add_argument("n", type=_positive)
    p.add_argument("--method", choices=sorted(METHODS), default="inductive")
    p.add_argument("--format", choices=["text", "json", "coeffs"], default="text")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("k", help="classify a pair and print the minimal constant")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_k)

    p = sub.add_parser("cert", help="emit a JSON certificate k = a*Phi_m + b*Phi_n")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--method", choices=["auto", "constructive", "lattice"], default="auto")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("verify", help="check a certificate document ('-' reads stdin)")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the identity and oracle sweeps")
    p.add_argument("--max", type=_positive, default=60)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("table", help="CSV of class and k for all 1 <= n < m <= MAX")
    p.add_argument("max", type=_positive)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantBreach as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CyclobezError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BREACH


if __name__ == "__main__":
    sys.exit(main())
