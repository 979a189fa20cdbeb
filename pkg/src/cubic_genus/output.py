"""Flat, order-stable records for the command line (JSON lines, CSV, aligned table)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields

from .conductor import MultipletGroup, conductor_profile
from .genus import Classification, sorted_pft


@dataclass
class OutputRecord:
    input: int
    d: int
    canonical: int
    e: int
    v: int
    w: int
    I: int  # noqa: E741
    J: int
    f: int
    species: str
    f_n: int
    f_u: int
    f_v: int
    m: int
    kind: str
    t: int
    q_star: int
    rank: int
    form: int | None
    pft: list[str] = field(default_factory=list)
    rank_bound_only: bool = False
    warnings: list[str] = field(default_factory=list)

    @classmethod
    def from_classification(cls, c: Classification) -> OutputRecord:
        sig, prof, rep = c.signature, c.profile, c.report
        return cls(
            input=c.input,
            d=c.d,
            canonical=c.canonical,
            e=sig.e,
            v=sig.v,
            w=sig.w,
            I=sig.I,
            J=sig.J,
            f=prof.f,
            species=prof.species.value,
            f_n=prof.n,
            f_u=prof.u,
            f_v=prof.v,
            m=prof.m,
            kind=rep.multiplet_kind,
            t=rep.t,
            q_star=rep.q_star,
            rank=rep.rank,
            form=rep.matched_form,
            pft=sorted_pft(rep.pft_possible),
            rank_bound_only=rep.rank_bound_only,
            warnings=list(c.warnings),
        )

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        data = json.loads(text)
        names = [f.name for f in fields(cls)]
        if list(data) != names:
            raise ValueError(f"unexpected fields {list(data)}")
        return cls(**data)


@dataclass
class MultipletRecord:
    f: int
    species: str
    m: int
    observed: int
    kind: str
    complete: bool
    members: list[int]

    @classmethod
    def from_group(cls, group: MultipletGroup) -> MultipletRecord:
        prof = conductor_profile(group.f)
        return cls(
            f=group.f,
            species=prof.species.value,
            m=prof.m,
            observed=len(group.members),
            kind=group.kind,
            complete=group.complete,
            members=list(group.members),
        )

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "|".join(str(v) for v in value)
    return str(value)


def header(record_type) -> list[str]:
    return [f.name for f in fields(record_type)]


def csv_lines(records, record_type, with_header: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if with_header:
        writer.writerow(header(record_type))
    for rec in records:
        writer.writerow([_cell(v) for v in rec.to_dict().values()])
    return buf.getvalue()


TABLE_COLUMNS = {
    OutputRecord: ("d", "canonical", "e", "w", "J", "f", "species", "m", "kind", "t", "q_star", "rank", "form", "pft"),
    MultipletRecord: ("f", "species", "m", "observed", "kind", "complete", "members"),
}


def table_text(records, record_type) -> str:
    cols = TABLE_COLUMNS[record_type]
    rows = [[_cell(rec.to_dict()[c]) or "-" for c in cols] for rec in records]
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"
