"""Command-line front end.

Usage examples::

    fibcube poly --family gamma --n 6
    fibcube poly --family lambda --n-max 12 --method all
    fibcube enumerate --family gamma --n 4 --format json
    fibcube weights --family lucas --n 6
    fibcube verify --oracle-max 8

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional

from .bitstring import Family, count_by_weight
from .exceptions import DomainError, ResourceError
from .graph import build
from .hypercube import oracle_cap
from .maximal import count_f, count_g, enumerate_maximal
from .poly import METHODS, poly_by_formula
from .verify import FORMULA_CAP, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("fibcube")


def _family(value: str) -> Family:
    try:
        family = Family.parse(value)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if family is Family.HYPERCUBE:
        raise argparse.ArgumentTypeError("family must be gamma/fibonacci or lambda/lucas")
    return family


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def _csv_text(header: List[str], rows: List[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_poly(args) -> "tuple[int, str]":
    family = args.family
    if args.n is not None:
        ns = [args.n]
    else:
        ns = list(range((args.n_max if args.n_max is not None else 6) + 1))
    if ns[-1] > FORMULA_CAP:
        raise ResourceError(f"n capped at {FORMULA_CAP}")
    methods = list(METHODS) if args.method == "all" else [args.method]

    table = {m: [METHODS[m](n, family) for n in ns] for m in methods}
    disagree = [
        n for i, n in enumerate(ns)
        if len({table[m][i] for m in methods}) > 1
    ]

    if args.format == "json":
        rows = [
            {"family": family.symbol, "method": m, **table[m][i].to_json()}
            for i in range(len(ns)) for m in methods
        ]
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        rows = [
            [n, family.symbol, p, c, m]
            for i, n in enumerate(ns) for m in methods
            for p, c in enumerate(table[m][i].coeffs)
        ]
        text = _csv_text(["n", "family", "p", "count", "source"], rows)
    elif len(ns) == 1 and len(methods) == 1:
        text = f"{table[methods[0]][0]}\n"
    else:
        lines = []
        for i, n in enumerate(ns):
            if len(methods) == 1:
                lines.append(f"{n}\t{table[methods[0]][i]}")
                continue
            lines.extend(f"{n}\t{m}\t{table[m][i]}" for m in methods)
            lines.append(f"{n}\tstatus\t{'DISAGREE' if n in disagree else 'agree'}")
        text = "\n".join(lines) + "\n"
    return (EXIT_FAIL if disagree else EXIT_OK), text


def cmd_enumerate(args) -> "tuple[int, str]":
    family, n = args.family, args.n
    cubes = enumerate_maximal(n, family)
    if args.format == "json":
        text = json.dumps([c.to_json() for c in cubes], indent=2) + "\n"
    elif args.format == "csv":
        rows = [
            [n, family.symbol, c.dimension, c.bottom.csv_token(), c.top.csv_token(),
             " ".join(map(str, c.support))]
            for c in cubes
        ]
        text = _csv_text(["n", "family", "dimension", "bottom", "top", "support"], rows)
    else:
        g = build(n, family)
        header = "".join(
            f"// maximal cube dim={c.dimension} bottom={c.bottom.csv_token()} top={c.top.csv_token()}\n"
            for c in cubes
        )
        text = header + g.to_dot(highlight=[c.top for c in cubes])
    return EXIT_OK, text


def cmd_weights(args) -> "tuple[int, str]":
    family, n = args.family, args.n
    source = "closed-form" if family is Family.FIBONACCI else "enumeration"
    rows = [[n, family.symbol, w, count_by_weight(n, w, family), source] for w in range(n + 1)]
    return EXIT_OK, _csv_text(["n", "family", "w", "count", "source"], rows)


def _faulty(counter):
    def wrapped(n, p):
        return counter(n, p) + (1 if (n, p) == (6, 3) else 0)
    return wrapped


def cmd_verify(args) -> "tuple[int, str]":
    cap = oracle_cap()
    if args.oracle_max > cap:
        raise ResourceError(f"--oracle-max {args.oracle_max} exceeds oracle cap {cap}")
    if args.n_max > FORMULA_CAP:
        raise ResourceError(f"--n-max {args.n_max} exceeds {FORMULA_CAP}")
    counters = {Family.FIBONACCI: count_f, Family.LUCAS: count_g}
    if args.fault:
        key = Family.FIBONACCI if args.fault == "count_f" else Family.LUCAS
        counters[key] = _faulty(counters[key])
    report = run_verification(args.oracle_max, args.n_max, counters)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    else:
        text = "\n".join(report.lines()) + "\n"
    return (EXIT_OK if report.ok else EXIT_FAIL), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibcube",
        description="Maximal hypercubes in Fibonacci and Lucas cubes.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log timings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices, fmt_default):
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = sub.add_parser("poly", help="counting polynomials C'(G_n, x)")
    p.add_argument("--family", type=_family, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=_nonneg, help="single order n")
    group.add_argument("--n-max", type=_nonneg, help="rows 0..N (default 6)")
    p.add_argument("--method", choices=[*METHODS, "all"], default="formula")
    common(p, ["text", "json", "csv"], "text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("enumerate", help="list maximal hypercubes")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    common(p, ["json", "csv", "dot"], "json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("weights", help="vertex counts by weight")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", help="run the verification report")
    p.add_argument("--oracle-max", type=_nonneg, default=8)
    p.add_argument("--n-max", type=_nonneg, default=20)
    p.add_argument("--fault", choices=["count_f", "count_g"], help=argparse.SUPPRESS)
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        code, text = args.func(args)
    except ResourceError as exc:
        print(f"fibcube: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"fibcube: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
