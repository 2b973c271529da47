"""Command-line front end: term, matrix, sum, gf, verify, bench.

Exit codes: 0 success, 2 usage/parse/constraint error, 3 precision
exhausted, 4 cross-strategy value mismatch.  Big integers are emitted as
decimal strings in JSON (never floats -- values outgrow 64-bit parsers
within a few dozen indices).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .bench import run_bench
from .binet import DEFAULT_PRECISION, binet_lucas, binet_trib
from .core import SequenceKind, lucas_trib, trib
from .errors import PrecisionExhausted, StrategyMismatch, UnknownIdentity
from .identities import (PROFILE_BOUNDS, Profile, format_report_table,
                         report_to_dict, verify, verify_all)
from .matrices import (Mat3, MatrixKind, k_matrix, lucas_fast, t_matrix,
                       trib_fast)
from .series import (SumSpec, gf_coeffs, gf_matrix_coeffs, partial_sum,
                     partial_sum_bruteforce)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_MISMATCH = 4

_SCALAR_KINDS = {
    "T": SequenceKind.TRIBONACCI,
    "K": SequenceKind.TRIBONACCI_LUCAS,
}
_MATRIX_KINDS = {
    "T": MatrixKind.TRIB_MATRIX,
    "K": MatrixKind.LUCAS_MATRIX,
}
_SUM_KINDS = {
    "T": SequenceKind.TRIBONACCI,
    "K": SequenceKind.TRIBONACCI_LUCAS,
    "TM": MatrixKind.TRIB_MATRIX,
    "KM": MatrixKind.LUCAS_MATRIX,
}


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("plain", "json", "csv"),
                     default="plain", help="output format")
    sub.add_argument("--precision", type=int, default=None,
                     help="working precision in bits "
                          "(default: TRIBKIT_PRECISION or 256)")
    sub.add_argument("--jobs", type=int, default=1,
                     help="worker threads for verify (best effort)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribkit",
        description="Exact Tribonacci / Tribonacci-Lucas computation, "
                    "matrix sequences, sums, series and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", help="nth term of T or K")
    p.add_argument("kind", choices=sorted(_SCALAR_KINDS))
    p.add_argument("n", type=int)
    p.add_argument("--strategy", choices=("iterate", "matpow", "binet"),
                   default="iterate")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_term)

    p = sub.add_parser("matrix", help="nth matrix term TM(n) or KM(n)")
    p.add_argument("kind", choices=sorted(_MATRIX_KINDS))
    p.add_argument("n", type=int)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("sum", help="closed-form sum of n terms at m*i + j")
    p.add_argument("kind", choices=sorted(_SUM_KINDS))
    p.add_argument("m", type=int)
    p.add_argument("j", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true",
                   help="also run the brute-force oracle and compare")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("gf", help="leading generating-function coefficients")
    p.add_argument("kind", choices=sorted(_SUM_KINDS))
    p.add_argument("count", type=int)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_gf)

    p = sub.add_parser("verify", help="run identity verification")
    p.add_argument("ids", nargs="*", help="identity ids (default: all)")
    p.add_argument("--profile", choices=[pr.value for pr in Profile],
                   default=Profile.STANDARD.value)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="compare nth-term strategies")
    p.add_argument("--n", required=True,
                   help="comma-separated indices, e.g. 1000,100000")
    p.add_argument("--strategies", default="iterate,matpow",
                   help="comma-separated subset of iterate,matpow,binet")
    p.add_argument("--kind", choices=sorted(_SCALAR_KINDS), default="T")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_bench)

    return parser


def _resolve_precision(args) -> int:
    if args.precision is not None:
        return args.precision
    return int(os.environ.get("TRIBKIT_PRECISION", DEFAULT_PRECISION))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _mat_json(m: Mat3) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.rows()]


def _mat_plain(m: Mat3) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m.rows())


def _mat_csv_rows(m: Mat3, prefix: list) -> list[list]:
    # row/col are 1-based, matching the prose convention
    return [prefix + [r + 1, c + 1, str(m.entry(r, c))]
            for r in range(3) for c in range(3)]


def cmd_term(args, precision: int) -> int:
    kind = _SCALAR_KINDS[args.kind]
    if args.strategy == "iterate":
        fn = trib if kind is SequenceKind.TRIBONACCI else lucas_trib
        value = fn(args.n)
    elif args.strategy == "matpow":
        fn = trib_fast if kind is SequenceKind.TRIBONACCI else lucas_fast
        value = fn(args.n)
    else:
        fn = binet_trib if kind is SequenceKind.TRIBONACCI else binet_lucas
        value = fn(args.n, precision)
    if args.format == "plain":
        print(value)
    elif args.format == "json":
        print(json.dumps({"kind": args.kind, "n": args.n,
                          "strategy": args.strategy, "value": str(value)}))
    else:
        w = _csv_writer()
        w.writerow(["kind", "n", "strategy", "value"])
        w.writerow([args.kind, args.n, args.strategy, str(value)])
    return EXIT_OK


def cmd_matrix(args, precision: int) -> int:
    kind = _MATRIX_KINDS[args.kind]
    if kind is MatrixKind.TRIB_MATRIX:
        value = t_matrix(args.n)
    else:
        value = k_matrix(args.n)
    if args.format == "plain":
        print(_mat_plain(value))
    elif args.format == "json":
        print(json.dumps(_mat_json(value)))
    else:
        w = _csv_writer()
        w.writerow(["kind", "n", "row", "col", "value"])
        w.writerows(_mat_csv_rows(value, [args.kind, args.n]))
    return EXIT_OK


def cmd_sum(args, precision: int) -> int:
    spec = SumSpec(_SUM_KINDS[args.kind], args.m, args.j, args.n)
    value = partial_sum(spec)
    checked = None
    if args.check:
        oracle = partial_sum_bruteforce(spec)
        if value != oracle:
            print(f"error: closed form {value!r} disagrees with "
                  f"brute force {oracle!r} for {spec}", file=sys.stderr)
            return EXIT_MISMATCH
        checked = "ok"
    is_matrix = isinstance(value, Mat3)
    if args.format == "plain":
        print(_mat_plain(value) if is_matrix else value)
        if checked:
            print("check: closed form matches brute force")
    elif args.format == "json":
        payload = {"kind": args.kind, "m": args.m, "j": args.j, "n": args.n,
                   "value": _mat_json(value) if is_matrix else str(value)}
        if checked:
            payload["check"] = checked
        print(json.dumps(payload))
    else:
        w = _csv_writer()
        prefix = [args.kind, args.m, args.j, args.n]
        if is_matrix:
            w.writerow(["kind", "m", "j", "n", "row", "col", "value"]
                       + (["check"] if checked else []))
            for row in _mat_csv_rows(value, prefix):
                w.writerow(row + ([checked] if checked else []))
        else:
            w.writerow(["kind", "m", "j", "n", "value"]
                       + (["check"] if checked else []))
            w.writerow(prefix + [str(value)] + ([checked] if checked else []))
    return EXIT_OK


def cmd_gf(args, precision: int) -> int:
    kind = _SUM_KINDS[args.kind]
    if isinstance(kind, SequenceKind):
        coeffs = gf_coeffs(kind, args.count)
        if args.format == "plain":
            print(" ".join(str(c) for c in coeffs))
        elif args.format == "json":
            print(json.dumps([str(c) for c in coeffs]))
        else:
            w = _csv_writer()
            w.writerow(["kind", "i", "value"])
            for i, c in enumerate(coeffs):
                w.writerow([args.kind, i, str(c)])
        return EXIT_OK
    mats = gf_matrix_coeffs(kind, args.count)
    if args.format == "plain":
        for i, m in enumerate(mats):
            rows = " | ".join(" ".join(str(x) for x in row)
                              for row in m.rows())
            print(f"{i}: {rows}")
    elif args.format == "json":
        print(json.dumps([_mat_json(m) for m in mats]))
    else:
        w = _csv_writer()
        w.writerow(["kind", "i", "row", "col", "value"])
        for i, m in enumerate(mats):
            w.writerows(_mat_csv_rows(m, [args.kind, i]))
    return EXIT_OK


def cmd_verify(args, precision: int) -> int:
    profile = Profile(args.profile)
    bounds = PROFILE_BOUNDS[profile]
    if args.ids:
        reports = [verify(identity_id, bounds) for identity_id in args.ids]
    else:
        reports = verify_all(profile, jobs=args.jobs)
    if args.format == "plain":
        print(format_report_table(reports))
        failed = [r.identity_id for r in reports if not r.passed]
        if failed:
            print(f"FAILED: {', '.join(failed)}")
        else:
            print(f"all {len(reports)} identities passed")
    elif args.format == "json":
        print(json.dumps([report_to_dict(r) for r in reports]))
    else:
        w = _csv_writer()
        w.writerow(["id", "status", "cases", "failures", "elapsed_ms"])
        for r in reports:
            w.writerow([r.identity_id, "pass" if r.passed else "fail",
                        r.cases, len(r.failures),
                        round(r.elapsed_s * 1000, 3)])
    return EXIT_OK if all(r.passed for r in reports) else 1


def cmd_bench(args, precision: int) -> int:
    ns = [int(part) for part in args.n.split(",") if part]
    strategies = [part for part in args.strategies.split(",") if part]
    kind = _SCALAR_KINDS[args.kind]
    results = run_bench(kind, ns, strategies, precision)
    rows = [{
        "strategy": r.strategy,
        "kind": args.kind,
        "n": r.n,
        "elapsed_ms": round(r.elapsed_s * 1000, 3),
        "big_adds": r.big_adds,
        "big_muls": r.big_muls,
        "mat_muls": r.mat_muls,
        "precision": r.precision,
    } for r in results]
    if args.format == "plain":
        print(f"{'STRATEGY':<10} {'N':>12} {'MS':>12} {'ADDS':>12} "
              f"{'MULS':>12} {'MATMULS':>8}  PRECISION")
        for row in rows:
            prec = row["precision"] if row["precision"] is not None else "-"
            print(f"{row['strategy']:<10} {row['n']:>12} "
                  f"{row['elapsed_ms']:>12.3f} {row['big_adds']:>12} "
                  f"{row['big_muls']:>12} {row['mat_muls']:>8}  {prec}")
    elif args.format == "json":
        print(json.dumps(rows))
    else:
        w = _csv_writer()
        w.writerow(["strategy", "kind", "n", "elapsed_ms", "big_adds",
                    "big_muls", "mat_muls", "precision"])
        for row in rows:
            w.writerow([row["strategy"], row["kind"], row["n"],
                        row["elapsed_ms"], row["big_adds"], row["big_muls"],
                        row["mat_muls"],
                        "" if row["precision"] is None else row["precision"]])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = _resolve_precision(args)
        return args.handler(args, precision)
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except StrategyMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except UnknownIdentity as exc:
        print(f"error: unknown identity: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
