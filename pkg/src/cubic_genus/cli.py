"""Command line: ``cubic-genus {classify,enumerate,multiplets,verify}``.

Exit codes: 0 success, 1 fixture mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .conductor import Species, conductor_pairs, enumerate_multiplets
from .genus import classify
from .output import MultipletRecord, OutputRecord, csv_lines, table_text
from .radicand import MAX_INPUT
from .tables import TABLE_SPECIES, load_fixtures, verify

JOBS_ENV = "CUBIC_GENUS_JOBS"
FORMATS = ("json", "csv", "table")
FILTER_KEYS = ("rank", "form", "species", "m")


def _radicand(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2 or value > MAX_INPUT:
        raise argparse.ArgumentTypeError(f"{value} out of range: need 2 <= D < 2**64")
    return value


def parse_filter(text: str) -> dict[str, object]:
    """Parse ``key=value[,key=value...]`` into a conjunction of constraints."""
    out: dict[str, object] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in FILTER_KEYS:
            raise argparse.ArgumentTypeError(f"bad filter term {part!r}; keys are {', '.join(FILTER_KEYS)}")
        if key == "species":
            if value not in {s.value for s in Species}:
                raise argparse.ArgumentTypeError(f"species must be 1a, 1b or 2, got {value!r}")
            out[key] = value
        elif key == "form" and value.lower() == "none":
            out[key] = None
        else:
            try:
                out[key] = int(value)
            except ValueError:
                raise argparse.ArgumentTypeError(f"{key} needs an integer, got {value!r}") from None
    return out


def _matches(rec: OutputRecord, conditions: dict[str, object]) -> bool:
    return all(getattr(rec, key) == value for key, value in conditions.items())


def _jobs(value: int | None, parser: argparse.ArgumentParser) -> int:
    if value is None:
        env = os.environ.get(JOBS_ENV, "").strip()
        if not env:
            return 1
        try:
            value = int(env)
        except ValueError:
            parser.error(f"{JOBS_ENV} must be an integer, got {env!r}")
    if value < 1:
        parser.error("--jobs must be >= 1")
    return value


def _classify_many(ds: list[int]) -> list[OutputRecord]:
    return [OutputRecord.from_classification(classify(d)) for d in ds]


def _emit(records, record_type, fmt: str, out) -> None:
    records = list(records)
    if fmt == "json":
        for rec in records:
            out.write(rec.to_json() + "\n")
    elif fmt == "csv":
        out.write(csv_lines(records, record_type))
    else:
        out.write(table_text(records, record_type))


def cmd_classify(args, parser) -> int:
    rec = OutputRecord.from_classification(classify(args.d))
    if args.format == "table":
        for w in rec.warnings:
            print(f"warning: {w}", file=sys.stderr)
    _emit([rec], OutputRecord, args.format, sys.stdout)
    return 0


def enumerate_records(max_d: int, conditions: dict[str, object], jobs: int = 1) -> list[OutputRecord]:
    ds = [d for _, d in conductor_pairs(max_d, jobs)]
    if jobs <= 1:
        records = _classify_many(ds)
    else:
        size = -(-len(ds) // jobs)
        chunks = [ds[i : i + size] for i in range(0, len(ds), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [rec for part in pool.map(_classify_many, chunks) for rec in part]
    return [rec for rec in records if _matches(rec, conditions)]


def cmd_enumerate(args, parser) -> int:
    jobs = _jobs(args.jobs, parser)
    _emit(enumerate_records(args.max, args.filter, jobs), OutputRecord, args.format, sys.stdout)
    return 0


def cmd_multiplets(args, parser) -> int:
    jobs = _jobs(args.jobs, parser)
    groups = enumerate_multiplets(args.max, jobs)
    _emit((MultipletRecord.from_group(g) for g in groups), MultipletRecord, args.format, sys.stdout)
    return 0


def cmd_verify(args, parser) -> int:
    try:
        rows = load_fixtures(args.fixtures, args.table)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))
    report = verify(rows)
    for row, problems in report.failures:
        print(f"FAIL table {row.source_table} row d={row.d}: {'; '.join(problems)}")
    for t in sorted(report.total):
        print(f"table {t}: {report.passed.get(t, 0)}/{report.total[t]} rows pass")
    print("OK" if report.ok else f"MISMATCH in {len(report.failures)} row(s)")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic-genus",
        description="Conductor, multiplicity and ambiguous 3-class rank of pure cubic fields Q(cbrt(D)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default: ${JOBS_ENV} or 1)")

    p = sub.add_parser("classify", help="classify one radicand")
    p.add_argument("d", type=_radicand)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="classify every canonical radicand up to --max")
    p.add_argument("--max", type=_radicand, required=True)
    p.add_argument("--filter", type=parse_filter, default={}, help="e.g. rank=2,species=1a (keys: rank, form, species, m)")
    add_format(p)
    add_jobs(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("multiplets", help="group canonical radicands up to --max by conductor")
    p.add_argument("--max", type=_radicand, required=True)
    add_format(p)
    add_jobs(p)
    p.set_defaults(func=cmd_multiplets)

    p = sub.add_parser("verify", help="check the bundled table fixtures")
    p.add_argument("--table", type=int, choices=sorted(TABLE_SPECIES))
    p.add_argument("--fixtures", help="directory holding table1.csv ... table5.csv")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
