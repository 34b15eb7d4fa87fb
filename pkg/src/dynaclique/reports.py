"""Per-insertion audit records and their CSV serialization."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .oracle import Clique


class Method(str, Enum):
    """Candidate generation strategy for an edge insertion.

    ``proposed`` intersects each clique containing one chosen endpoint with
    the closed neighborhood of the other (one list, linear in its length).
    ``existing`` intersects every clique containing u with every clique
    containing v (all pairs, quadratic).
    """

    PROPOSED = "proposed"
    EXISTING = "existing"


@dataclass
class InsertionReport:
    """Audit record for one edge insertion.

    ``candidates_after_dedup <= candidates_generated``; every added clique
    contains both endpoints and lies inside their common closed
    neighborhood in the updated graph.
    """

    edge: tuple[int, int]
    method: Method
    side: int | None
    candidates_generated: int
    candidates_after_dedup: int
    added: list[Clique]
    removed: list[Clique]
    total_cliques: int
    elapsed_ns: int
    k: int | None = None
    weight: float | None = None
    round_index: int | None = None

    @property
    def num_added(self) -> int:
        return len(self.added)

    @property
    def num_removed(self) -> int:
        return len(self.removed)


BASE_COLUMNS = (
    "step",
    "u",
    "v",
    "method",
    "side",
    "candidates_generated",
    "candidates_after_dedup",
    "num_added",
    "num_removed",
    "total_cliques",
    "elapsed_ns",
)


def csv_columns(
    *, include_k: bool = False, include_weight: bool = False, include_round: bool = False
) -> list[str]:
    cols = list(BASE_COLUMNS)
    if include_k:
        cols.append("k")
    if include_weight:
        cols.append("weight")
    if include_round:
        cols.append("round")
    return cols


def report_row(
    step: int,
    report: InsertionReport,
    *,
    include_k: bool = False,
    include_weight: bool = False,
    include_round: bool = False,
    timings: bool = True,
) -> list[str]:
    u, v = report.edge
    row = [
        str(step),
        str(u),
        str(v),
        report.method.value,
        "" if report.side is None else str(report.side),
        str(report.candidates_generated),
        str(report.candidates_after_dedup),
        str(report.num_added),
        str(report.num_removed),
        str(report.total_cliques),
        str(report.elapsed_ns) if timings else "0",
    ]
    if include_k:
        row.append("" if report.k is None else str(report.k))
    if include_weight:
        row.append("" if report.weight is None else repr(report.weight))
    if include_round:
        row.append("" if report.round_index is None else str(report.round_index))
    return row


def write_reports_csv(
    dest,
    reports: Iterable[InsertionReport],
    *,
    include_k: bool = False,
    include_weight: bool = False,
    include_round: bool = False,
    timings: bool = True,
) -> None:
    """Write one CSV row per report, steps numbered from 1.

    ``dest`` is a path or a text file object. With ``timings=False`` the
    elapsed column is zeroed so the file is byte-deterministic.
    """
    opts = dict(
        include_k=include_k, include_weight=include_weight, include_round=include_round
    )
    if isinstance(dest, (str, bytes)) or hasattr(dest, "__fspath__"):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            _write(fh, reports, timings=timings, **opts)
    else:
        _write(dest, reports, timings=timings, **opts)


def _write(fh, reports: Iterable[InsertionReport], *, timings: bool, **opts) -> None:
    writer = csv.writer(fh)
    writer.writerow(csv_columns(**opts))
    for step, report in enumerate(reports, start=1):
        writer.writerow(report_row(step, report, timings=timings, **opts))


def reports_csv_text(reports: Sequence[InsertionReport], **kwargs) -> str:
    buf = io.StringIO()
    write_reports_csv(buf, reports, **kwargs)
    return buf.getvalue()
