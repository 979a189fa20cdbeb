"""Example radicands of rank 2 in five tables, each sharing one species and multiplicity."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from math import prod
from pathlib import Path

from .conductor import Species
from .genus import classify

# table number -> (species, multiplicity) shared by every row
TABLE_SPECIES = {
    1: (Species.ONE_A, 2),
    2: (Species.TWO, 2),
    3: (Species.ONE_B, 2),
    4: (Species.ONE_A, 4),
    5: (Species.TWO, 2),
}
COLUMNS = ("d", "e3", "p1", "p2", "q1", "q2")


@dataclass(frozen=True)
class FixtureRow:
    d: int
    expected_species: Species
    expected_f_factors: tuple[int, ...]
    expected_m: int
    source_table: int
    e3: int = 0
    expected_rank: int = 2

    @property
    def expected_f(self) -> int:
        three = {Species.ONE_A: 9, Species.ONE_B: 3, Species.TWO: 1}[self.expected_species]
        return three * prod(p for p in self.expected_f_factors if p != 3)


def _row_from_csv(record: dict[str, str], table: int) -> FixtureRow:
    species, m = TABLE_SPECIES[table]
    primes = [int(record[c]) for c in ("p1", "p2", "q1", "q2") if record.get(c, "").strip()]
    e3 = int(record["e3"] or 0)
    support = sorted(([3] if species is not Species.TWO else []) + primes)
    return FixtureRow(
        d=int(record["d"]),
        expected_species=species,
        expected_f_factors=tuple(support),
        expected_m=m,
        source_table=table,
        e3=e3,
    )


def fixture_dir() -> Path:
    return Path(str(resources.files("cubic_genus") / "fixtures"))


def load_table(table: int, directory: Path | str | None = None) -> list[FixtureRow]:
    if table not in TABLE_SPECIES:
        raise ValueError(f"no table {table}; expected one of {sorted(TABLE_SPECIES)}")
    path = Path(directory or fixture_dir()) / f"table{table}.csv"
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != COLUMNS:
            raise ValueError(f"{path}: header must be {','.join(COLUMNS)}")
        return [_row_from_csv(rec, table) for rec in reader]


def load_fixtures(directory: Path | str | None = None, table: int | None = None) -> list[FixtureRow]:
    tables = [table] if table is not None else sorted(TABLE_SPECIES)
    return [row for t in tables for row in load_table(t, directory)]


def check_row(row: FixtureRow) -> list[str]:
    """Mismatches between ``classify(row.d)`` and the row; empty when it agrees."""
    problems = []
    try:
        c = classify(row.d)
    except ValueError as exc:
        return [str(exc)]
    sig = c.signature
    if sig.e != row.e3:
        problems.append(f"exponent of 3 is {sig.e}, expected {row.e3}")
    if c.profile.species is not row.expected_species:
        problems.append(f"species {c.profile.species}, expected {row.expected_species}")
    if c.profile.f != row.expected_f:
        problems.append(f"conductor {c.profile.f}, expected {row.expected_f}")
    f_support = tuple(sorted(set(sig.primes()) | ({3} if c.profile.f % 3 == 0 else set())))
    if f_support != row.expected_f_factors:
        problems.append(f"conductor primes {f_support}, expected {row.expected_f_factors}")
    if c.profile.m != row.expected_m:
        problems.append(f"multiplicity {c.profile.m}, expected {row.expected_m}")
    if c.report.rank != row.expected_rank:
        problems.append(f"rank {c.report.rank}, expected {row.expected_rank}")
    return problems


@dataclass
class VerifyReport:
    passed: dict[int, int]
    total: dict[int, int]
    failures: list[tuple[FixtureRow, list[str]]]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify(rows: list[FixtureRow]) -> VerifyReport:
    report = VerifyReport(passed={}, total={}, failures=[])
    for row in rows:
        t = row.source_table
        report.total[t] = report.total.get(t, 0) + 1
        problems = check_row(row)
        if problems:
            report.failures.append((row, problems))
        else:
            report.passed[t] = report.passed.get(t, 0) + 1
    return report
