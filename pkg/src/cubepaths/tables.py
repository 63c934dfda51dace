"""Machine-readable count tables: constant-distance shells in 3D and the
planar chessboard slice.

Counts are serialized as decimal strings in every format; they outgrow any
fixed-width integer almost immediately.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import permutations, product
from typing import NamedTuple, Optional

from .core import CanonicalOffset, GridPoint, Neighborhood
from .counting import count_n8_2d, count_paths
from .metrics import displacement_metric


class TableEntry(NamedTuple):
    point: GridPoint
    distance: int
    count: int


@dataclass(frozen=True)
class CountTable:
    """Rows of (point, distance, count), sorted lexicographically by point.

    Shell tables carry their neighborhood and requested length (every row
    sits at that distance).  The planar slice sets both to None: it is the
    2D chessboard, not one of the 3D connectivities, and its rows span
    distances 0..max_i.
    """

    neighborhood: Optional[Neighborhood]
    length: Optional[int]
    entries: tuple[TableEntry, ...]


def symmetry_images(point: GridPoint) -> list[GridPoint]:
    """All distinct sign/permutation images of a point (up to 48)."""
    images = set()
    for a, b, c in permutations(point.as_tuple()):
        for sa, sb, sc in product((1, -1), repeat=3):
            images.add(GridPoint(sa * a, sb * b, sc * c))
    return sorted(images)


def shell_table(
    neighborhood: Neighborhood, length: int, expand_symmetry: bool = False
) -> CountTable:
    """Every canonical point at exactly the given digital distance, with its
    closed-form path count.

    By default only canonical representatives (i >= j >= k >= 0) appear,
    which avoids reporting each value up to 48 times; ``expand_symmetry``
    restores the full shell for reproducing complete distance spheres.
    """
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    dist = displacement_metric(neighborhood)
    entries: list[TableEntry] = []
    # the dominant coordinate never exceeds the digital distance
    for i in range(length + 1):
        for j in range(i + 1):
            for k in range(j + 1):
                if dist(i, j, k) != length:
                    continue
                count = count_paths(CanonicalOffset(i, j, k), neighborhood)
                if expand_symmetry:
                    entries.extend(
                        TableEntry(image, length, count)
                        for image in symmetry_images(GridPoint(i, j, k))
                    )
                else:
                    entries.append(TableEntry(GridPoint(i, j, k), length, count))
    entries.sort(key=lambda entry: entry.point)
    return CountTable(neighborhood=neighborhood, length=length, entries=tuple(entries))


def slice_table_2d(max_i: int) -> CountTable:
    """Planar chessboard counts for all 0 <= j <= i <= max_i.

    Points are reported in the z=0 plane; each row's distance is i, the
    chessboard distance of (i, j) from the origin.
    """
    if max_i < 0:
        raise ValueError(f"max_i must be nonnegative, got {max_i}")
    entries = [
        TableEntry(GridPoint(i, j, 0), i, count_n8_2d(i, j))
        for i in range(max_i + 1)
        for j in range(i + 1)
    ]
    entries.sort(key=lambda entry: entry.point)
    return CountTable(neighborhood=None, length=None, entries=tuple(entries))


_COLUMNS = ("i", "j", "k", "distance", "count")


def _delimited(table: CountTable, delimiter: str) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter=delimiter, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for point, dist, count in table.entries:
        writer.writerow([point.x, point.y, point.z, dist, str(count)])
    return buffer.getvalue()


def to_csv(table: CountTable) -> str:
    """Serialize as CSV with header i,j,k,distance,count and LF newlines."""
    return _delimited(table, ",")


def to_tsv(table: CountTable) -> str:
    """Serialize as TSV with the same columns as :func:`to_csv`."""
    return _delimited(table, "\t")


def to_json(table: CountTable) -> str:
    """Serialize as a JSON array of {point, distance, count} objects."""
    rows = [
        {"point": [point.x, point.y, point.z], "distance": dist, "count": str(count)}
        for point, dist, count in table.entries
    ]
    return json.dumps(rows)


def to_text(table: CountTable) -> str:
    """Render as an aligned human-readable table."""
    rows = [
        (str(point.x), str(point.y), str(point.z), str(dist), str(count))
        for point, dist, count in table.entries
    ]
    widths = [
        max(len(header), *(len(row[col]) for row in rows)) if rows else len(header)
        for col, header in enumerate(_COLUMNS)
    ]
    lines = ["  ".join(h.rjust(w) for h, w in zip(_COLUMNS, widths))]
    lines.extend(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows
    )
    return "\n".join(lines) + "\n"
