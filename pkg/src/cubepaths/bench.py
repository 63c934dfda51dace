"""Timing harness: closed formulas against the search oracle as coordinates
grow.  Demonstration quality only; no statistical rigor intended."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import CanonicalOffset, GridPoint, Neighborhood, ORIGIN
from .counting import count_paths
from .metrics import distance
from .oracle import oracle_count

# The DP touches on the order of a million lattice points near this distance,
# which keeps a default bench run under a minute.
DEFAULT_ORACLE_CAP = 60


@dataclass(frozen=True)
class BenchRow:
    m: int
    point: GridPoint
    neighborhood: Neighborhood
    distance: int
    formula_count: int
    formula_seconds: float
    oracle_count: Optional[int]  # None when the oracle was capped out
    oracle_seconds: Optional[float]

    @property
    def equal(self) -> Optional[bool]:
        if self.oracle_count is None:
            return None
        return self.oracle_count == self.formula_count


@dataclass(frozen=True)
class BenchReport:
    max_coord: int
    oracle_cap: int
    rows: tuple[BenchRow, ...]

    @property
    def all_equal(self) -> bool:
        """True iff formula and oracle agreed everywhere both ran."""
        return all(row.equal is not False for row in self.rows)


def _coordinate_family(max_coord: int) -> list[int]:
    family = []
    m = 1
    while m <= max_coord:
        family.append(m)
        m *= 2
    if family[-1] != max_coord:
        family.append(max_coord)
    return family


def bench_compare(
    max_coord: int,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    neighborhoods: Sequence[Neighborhood] = tuple(Neighborhood),
) -> BenchReport:
    """Time formula vs oracle on the fixed point family (m, m//2, m//4).

    m doubles from 1 up to max_coord (always including max_coord itself).
    The oracle is skipped wherever the digital distance exceeds oracle_cap;
    wherever both run, the two counts are compared.
    """
    if max_coord < 1:
        raise ValueError(f"max_coord must be >= 1, got {max_coord}")
    rows: list[BenchRow] = []
    for m in _coordinate_family(max_coord):
        point = GridPoint(m, m // 2, m // 4)
        offset = CanonicalOffset(m, m // 2, m // 4)
        for neighborhood in neighborhoods:
            dist = distance(point, ORIGIN, neighborhood)
            start = time.perf_counter()
            formula_count = count_paths(offset, neighborhood)
            formula_seconds = time.perf_counter() - start
            oracle_value: Optional[int] = None
            oracle_seconds: Optional[float] = None
            if dist <= oracle_cap:
                start = time.perf_counter()
                oracle_value = oracle_count(point, neighborhood)
                oracle_seconds = time.perf_counter() - start
            rows.append(
                BenchRow(
                    m=m,
                    point=point,
                    neighborhood=neighborhood,
                    distance=dist,
                    formula_count=formula_count,
                    formula_seconds=formula_seconds,
                    oracle_count=oracle_value,
                    oracle_seconds=oracle_seconds,
                )
            )
    return BenchReport(max_coord=max_coord, oracle_cap=oracle_cap, rows=tuple(rows))


def _abbreviate(value: int) -> str:
    text = str(value)
    if len(text) <= 15:
        return text
    return f"{text[0]}.{text[1:4]}e+{len(text) - 1}"


_HEADERS = ("m", "point", "n", "dist", "count", "formula_s", "oracle_s", "equal")


def render_text(report: BenchReport) -> str:
    """Human-readable table; huge counts are abbreviated (CSV keeps them
    exact)."""
    rows = []
    for row in report.rows:
        p = row.point
        rows.append(
            (
                str(row.m),
                f"({p.x},{p.y},{p.z})",
                str(row.neighborhood.value),
                str(row.distance),
                _abbreviate(row.formula_count),
                f"{row.formula_seconds:.6f}",
                "-" if row.oracle_seconds is None else f"{row.oracle_seconds:.6f}",
                "-" if row.equal is None else ("yes" if row.equal else "NO"),
            )
        )
    widths = [
        max(len(header), *(len(row[col]) for row in rows)) if rows else len(header)
        for col, header in enumerate(_HEADERS)
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(_HEADERS, widths))]
    lines.extend(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )
    skipped = sum(1 for row in report.rows if row.oracle_count is None)
    if skipped:
        lines.append(
            f"oracle skipped for {skipped} row(s) with distance > {report.oracle_cap}"
        )
    return "\n".join(lines) + "\n"


def to_csv(report: BenchReport) -> str:
    """CSV export with exact decimal counts."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ("m", "x", "y", "z", "neighborhood", "distance",
         "formula_count", "formula_seconds", "oracle_count", "oracle_seconds", "equal")
    )
    for row in report.rows:
        p = row.point
        writer.writerow(
            (
                row.m, p.x, p.y, p.z, row.neighborhood.value, row.distance,
                str(row.formula_count),
                f"{row.formula_seconds:.9f}",
                "" if row.oracle_count is None else str(row.oracle_count),
                "" if row.oracle_seconds is None else f"{row.oracle_seconds:.9f}",
                "" if row.equal is None else str(row.equal).lower(),
            )
        )
    return buffer.getvalue()
