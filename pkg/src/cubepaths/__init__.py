"""Exact digital distances and shortest-path counts on the 3D cubic grid.

Closed-form counting under 6-, 18- and 26-connectivity, cross-checked by a
formula-free graph-search oracle.  All counts are exact big integers.
"""

from .bench import BenchReport, BenchRow, bench_compare
from .core import (
    ORIGIN,
    CanonicalOffset,
    GridPoint,
    MoveStep,
    Neighborhood,
    admissible_moves,
    canonicalize,
)
from .counting import (
    N18Case,
    classify_n18,
    count_n6,
    count_n8_2d,
    count_n18,
    count_n18_halfcase,
    count_n18_maxcase,
    count_n26,
    count_paths,
    multinomial,
)
from .metrics import d6, d18, d26, distance, minkowski_distance
from .oracle import (
    PathList,
    enumerate_shortest_paths,
    iter_shortest_paths,
    oracle_count,
    oracle_count_2d,
)
from .tables import CountTable, TableEntry, shell_table, slice_table_2d
from .verify import VerifyReport, verify_region

__version__ = "0.1.0"

__all__ = [
    "ORIGIN",
    "BenchReport",
    "BenchRow",
    "CanonicalOffset",
    "CountTable",
    "GridPoint",
    "MoveStep",
    "N18Case",
    "Neighborhood",
    "PathList",
    "TableEntry",
    "VerifyReport",
    "admissible_moves",
    "bench_compare",
    "canonicalize",
    "classify_n18",
    "count_n6",
    "count_n8_2d",
    "count_n18",
    "count_n18_halfcase",
    "count_n18_maxcase",
    "count_n26",
    "count_paths",
    "d6",
    "d18",
    "d26",
    "distance",
    "enumerate_shortest_paths",
    "iter_shortest_paths",
    "minkowski_distance",
    "multinomial",
    "oracle_count",
    "oracle_count_2d",
    "shell_table",
    "slice_table_2d",
    "verify_region",
]
