"""Command-line entry point: ``conjmeasure <command> [flags]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Sequence

from . import csvio, verify
from .characters import build_table, table_for
from .class_algebra import Bounds
from .errors import ConjMeasureError
from .measures import KINDS, measure, sample
from .moments import char_ratio, convergence_report, limit_mixed_moment
from .partitions import format_partition, parse_partition
from .perms import parse_tuple
from .reduction import RULES, reduce


class UsageError(Exception):
    pass


def _n_values(args) -> list[int]:
    if args.n_range:
        try:
            parts = [int(x) for x in args.n_range.split(":")]
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
        except (ValueError, IndexError):
            raise UsageError(f"--n-range expects A:B[:STEP], got {args.n_range!r}")
        if step <= 0:
            raise UsageError("--n-range step must be positive")
        return list(range(start, stop + 1, step))
    if args.n is None:
        raise UsageError("one of --n or --n-range is required")
    return [args.n]


def _specs(args) -> list[tuple[tuple[int, ...], int]]:
    nus = args.nu or []
    ks = args.k or []
    if not nus:
        raise UsageError("at least one --nu is required")
    if ks and len(ks) != len(nus):
        raise UsageError("give one --k per --nu (or none for k=1)")
    ks = ks or [1] * len(nus)
    return [(parse_partition(nu), k) for nu, k in zip(nus, ks)]


def _emit(rows, schema: str, out: str | None) -> None:
    text = csvio.emit_csv(rows, schema, out)
    if out is None:
        sys.stdout.write(text)
    else:
        print(f"wrote {len(rows)} rows to {out}")


def cmd_chartab(args) -> int:
    n = _n_values(args)[0]
    _emit(csvio.chartab_rows(build_table(n)), "chartab", args.out)
    return 0


def cmd_measure(args) -> int:
    n = _n_values(args)[0]
    _emit(csvio.measure_rows(measure(args.kind, n)), "measure", args.out)
    return 0


def cmd_moments(args) -> int:
    reports = convergence_report(_n_values(args), args.kind, _specs(args))
    for r in reports:
        print(f"n={r.n} kind={r.kind} exact={r.exact} approx={r.approx:.12g} limit={r.limit} abs_dev={r.abs_dev:.6g}")
    if args.out:
        _emit(csvio.report_rows(reports), "moments", args.out)
    return 0


def cmd_limit(args) -> int:
    print(limit_mixed_moment(_specs(args)))
    return 0


def cmd_sample(args) -> int:
    n = _n_values(args)[0]
    table = table_for(n)
    draws = sample(measure(args.kind, n, table), args.seed, args.count)
    counts = Counter(draws)
    if args.nu:
        specs = _specs(args)
        if len(specs) != 1:
            raise UsageError("sample histograms take a single --nu")
        (nu, k), = specs
        bins: Counter = Counter()
        for lam, c in counts.items():
            bins[char_ratio(lam, nu, n, table) ** k] += c
        ordered = sorted(bins.items(), key=lambda kv: kv[0].to_decimal())
        rows = [(str(v), str(v.to_decimal(17)), c) for v, c in ordered]
        _emit(rows, "sample_values", args.out)
    else:
        rows = [(format_partition(lam), counts[lam]) for lam in table.partitions if counts[lam]]
        _emit(rows, "sample_partitions", args.out)
    return 0


def cmd_reduce(args) -> int:
    trace = reduce(parse_tuple(args.tuple), args.mode, args.rule)
    for line in trace.lines():
        print(line)
    print(f"reached_empty={trace.reached_empty}")
    return 0


def cmd_verify(args) -> int:
    bounds = Bounds()
    if args.target == "frobenius":
        checks = verify.frobenius_checks(_n_values(args)[0], args.max_m, bounds)
    elif args.target == "reduction":
        checks = verify.reduction_checks(args.max_entries, (2, 3), args.ground, args.max_cycles, args.rule)
    elif args.target == "pairing":
        checks = verify.pairing_checks(args.max_q)
    elif args.target == "eq5":
        ns = _n_values(args) if (args.n or args.n_range) else [4, 5]
        spec_list = [_specs(args)] if args.nu else verify.DEFAULT_EQ5_SPECS
        checks = verify.eq5_checks(ns, spec_list)
    else:
        checks = verify.normalization_checks(_n_values(args)[-1])
    for c in checks:
        if args.verbose or not c.ok:
            print(c.line())
    print(verify.summary(checks))
    return 0 if all(c.ok for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conjmeasure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=False, specs=False, out=True):
        p.add_argument("--n", type=int)
        p.add_argument("--n-range", metavar="A:B:STEP")
        if kind:
            p.add_argument("--kind", choices=KINDS, default="conjugacy")
        if specs:
            p.add_argument("--nu", action="append", help="class without 1-parts, e.g. 2 or 3+2 (repeatable)")
            p.add_argument("--k", action="append", type=int, help="power for the matching --nu")
        if out:
            p.add_argument("--out", help="CSV output path (stdout when omitted)")

    p = sub.add_parser("chartab", help="character table as CSV")
    common(p)
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("measure", help="Plancherel or conjugacy measure as CSV")
    common(p, kind=True)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("moments", help="exact mixed moments of the character ratios")
    common(p, kind=True, specs=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("limit", help="Gaussian limit of a mixed moment")
    p.add_argument("--nu", action="append")
    p.add_argument("--k", action="append", type=int)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("sample", help="seeded draws from a measure, as a histogram CSV")
    common(p, kind=True, specs=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("reduce", help="run the deletion procedure on a cycle tuple")
    p.add_argument("tuple", help='e.g. "(1 2);(1 3);(5 6);(1 6)"')
    p.add_argument("--mode", choices=("search", "deterministic"), default="search")
    p.add_argument("--rule", choices=RULES, default="last/second")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="exhaustive verification sweeps")
    p.add_argument("target", choices=("frobenius", "reduction", "pairing", "eq5", "normalization"))
    common(p, specs=True, out=False)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-entries", type=int, default=4)
    p.add_argument("--ground", type=int, default=6)
    p.add_argument("--max-cycles", type=int, default=1, help="cycles per tuple entry in the reduction sweep")
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--rule", choices=RULES, default="last/second")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    print("# " + " ".join(["conjmeasure", *(argv if argv is not None else sys.argv[1:])]))
    try:
        return args.func(args)
    except (UsageError, ConjMeasureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
