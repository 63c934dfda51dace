"""Closed-form shortest-path counts, exact in arbitrary precision.

Counts grow super-exponentially (64-bit integers overflow near coordinate
sums of ~20), so everything here stays in Python's native big integers and
every division is an exact floor division of a known-integral quotient.
"""

from __future__ import annotations

from enum import Enum
from math import factorial
from typing import Iterable

from .core import CanonicalOffset, Neighborhood


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / prod(part!) for nonnegative parts summing to n."""
    parts = list(parts)
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError(f"multinomial needs nonnegative arguments: n={n}, parts={parts}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} sum to {sum(parts)}, expected {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def count_n6(off: CanonicalOffset) -> int:
    """Shortest paths under face connectivity: the trinomial coefficient.

    Every path takes exactly i, j and k unit steps along the three axes in
    some order, so the count is (i+j+k)! / (i! j! k!).
    """
    return multinomial(off.i + off.j + off.k, off.as_triple())


def count_n8_2d(i: int, j: int) -> int:
    """Shortest chessboard paths from (0, 0) to (i, j) in 2D, for i >= j >= 0.

    The distance is i.  A path with b falling diagonals needs j+b rising
    diagonals to land on row j, leaving i-j-2b straight moves, so each b
    contributes the arrangement count i! / (b! (j+b)! (i-j-2b)!).
    """
    if not i >= j >= 0:
        raise ValueError(f"count_n8_2d needs i >= j >= 0, got ({i}, {j})")
    fi = factorial(i)
    total = 0
    for b in range((i - j) // 2 + 1):
        total += fi // (factorial(b) * factorial(j + b) * factorial(i - j - 2 * b))
    return total


def count_n18_maxcase(off: CanonicalOffset) -> int:
    """Face-edge paths when the distance equals the dominant coordinate i
    (applicable iff i >= j + k).

    Every step advances x by one.  With a steps also moving -z and b steps
    also moving -y, compensation forces k+a steps moving +z and j+b steps
    moving +y; the remaining i-j-k-2(a+b) steps advance x alone.  Summing
    the arrangement counts over all feasible (a, b) gives the total.
    """
    i, j, k = off.as_triple()
    slack = i - j - k
    if slack < 0:
        raise ValueError(
            f"dominant-coordinate formula needs i >= j + k, got {off.as_triple()}"
        )
    fi = factorial(i)
    total = 0
    for a in range(slack // 2 + 1):
        for b in range((slack - 2 * a) // 2 + 1):
            total += fi // (
                factorial(a)
                * factorial(b)
                * factorial(k + a)
                * factorial(j + b)
                * factorial(slack - 2 * (a + b))
            )
    return total


def count_n18_halfcase(off: CanonicalOffset) -> int:
    """Face-edge paths when the distance is the half-sum ceiling L
    (applicable iff i <= j + k + 1).

    Even coordinate sum: every step advances two coordinates, and the step
    mix is fixed, giving L! / ((L-i)! (L-j)! (L-k)!).  Odd sum: exactly one
    step advances a single coordinate; summing that step's three possible
    axes yields the extra weight factor.  An axis whose (L - coordinate)
    factor is zero cannot host the single step, and contributes nothing.
    """
    i, j, k = off.as_triple()
    if i > j + k + 1:
        raise ValueError(
            f"half-sum formula needs i <= j + k + 1, got {off.as_triple()}"
        )
    total = i + j + k
    steps = (total + 1) // 2
    den = factorial(steps - i) * factorial(steps - j) * factorial(steps - k)
    if total % 2 == 0:
        return factorial(steps) // den
    ri, rj, rk = steps - i, steps - j, steps - k
    weight = ri * rj + rj * rk + rk * ri
    return factorial(steps) * weight // den


class N18Case(Enum):
    """Which face-edge formula applies to a canonical offset."""

    MAX_CASE = "max"  # distance is the dominant coordinate only
    HALF_CASE = "half"  # distance is the half-sum ceiling only
    OVERLAP = "overlap"  # both; the two formulas agree here


def classify_n18(off: CanonicalOffset) -> N18Case:
    i, j, k = off.as_triple()
    if i > j + k + 1:
        return N18Case.MAX_CASE
    if i < j + k:
        return N18Case.HALF_CASE
    return N18Case.OVERLAP


def count_n18(off: CanonicalOffset, check_overlap: bool = False) -> int:
    """Shortest paths under face-edge connectivity, dispatching on the case.

    Overlap offsets default to the dominant-coordinate sum, which has at
    most two terms there; with check_overlap=True both formulas run and a
    disagreement (impossible unless a formula is broken) raises.
    """
    case = classify_n18(off)
    if case is N18Case.MAX_CASE:
        return count_n18_maxcase(off)
    if case is N18Case.HALF_CASE:
        return count_n18_halfcase(off)
    value = count_n18_maxcase(off)
    if check_overlap:
        other = count_n18_halfcase(off)
        if other != value:
            raise AssertionError(
                f"overlap formulas disagree at {off.as_triple()}: {value} vs {other}"
            )
    return value


def count_n26(off: CanonicalOffset) -> int:
    """Shortest paths under full connectivity.

    A path projects to one chessboard path in the xy-plane and one in the
    xz-plane, and any two such projections combine, so the count is the
    product of the two planar counts.
    """
    return count_n8_2d(off.i, off.j) * count_n8_2d(off.i, off.k)


def count_paths(
    off: CanonicalOffset, neighborhood: Neighborhood, check_overlap: bool = False
) -> int:
    """Closed-form shortest-path count for a canonical offset."""
    if neighborhood is Neighborhood.N6:
        return count_n6(off)
    if neighborhood is Neighborhood.N18:
        return count_n18(off, check_overlap=check_overlap)
    return count_n26(off)
