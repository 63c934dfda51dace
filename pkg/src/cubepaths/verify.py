"""Formula-vs-oracle verification sweeps over canonical boxes.

Lives apart from the oracle so that the oracle module never imports the
counting module (their independence is the point of the cross-check).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CanonicalOffset, GridPoint, Neighborhood
from .counting import (
    N18Case,
    classify_n18,
    count_n18_halfcase,
    count_n18_maxcase,
    count_paths,
)
from .oracle import oracle_count


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one sweep; empty ``mismatches`` means every formula value
    equaled the search oracle on the box."""

    extent: int
    neighborhood: Neighborhood
    checked: int
    mismatches: tuple[tuple[GridPoint, int, int], ...]  # (point, formula, oracle)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_region(extent: int, neighborhood: Neighborhood) -> VerifyReport:
    """Check every canonical point 0 <= k <= j <= i <= extent.

    Under N18 an overlap point is checked against the oracle with *both*
    formulas, which also establishes that the two formulas agree with each
    other wherever both apply.
    """
    if extent < 0:
        raise ValueError(f"extent must be nonnegative, got {extent}")
    checked = 0
    mismatches: list[tuple[GridPoint, int, int]] = []
    for i in range(extent + 1):
        for j in range(i + 1):
            for k in range(j + 1):
                off = CanonicalOffset(i, j, k)
                point = GridPoint(i, j, k)
                expected = oracle_count(point, neighborhood)
                checked += 1
                if (
                    neighborhood is Neighborhood.N18
                    and classify_n18(off) is N18Case.OVERLAP
                ):
                    candidates = [count_n18_maxcase(off), count_n18_halfcase(off)]
                else:
                    candidates = [count_paths(off, neighborhood)]
                for got in candidates:
                    if got != expected:
                        mismatches.append((point, got, expected))
    return VerifyReport(
        extent=extent,
        neighborhood=neighborhood,
        checked=checked,
        mismatches=tuple(mismatches),
    )
