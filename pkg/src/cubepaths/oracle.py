"""Formula-free ground truth: shortest-path counting and enumeration by
explicit search over the move sets.

Nothing in this module may call the closed-form counting module; the
verification harness compares the two sides, so they must stay independent.
The search relies only on the digital metrics, which are themselves checked
against plain BFS in their own tests.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .core import GridPoint, MoveStep, Neighborhood, admissible_moves
from .metrics import displacement_metric

DEFAULT_ENUMERATION_LIMIT = 10_000


@dataclass(frozen=True)
class PathList:
    """Shortest paths to ``target``, each an ordered step sequence.

    Paths are pairwise distinct and listed in lexicographic step order;
    ``truncated`` is True iff more paths exist than were collected.
    """

    target: GridPoint
    neighborhood: Neighborhood
    paths: tuple[tuple[MoveStep, ...], ...]
    truncated: bool


def oracle_count(target: GridPoint, neighborhood: Neighborhood) -> int:
    """Exact number of shortest origin-to-target paths, by layered DP.

    Sweeps distance layers outward from the origin.  A point survives a
    layer iff its distance from the origin equals the layer index and its
    distance to the target equals the remainder, i.e. it still lies on some
    geodesic; its count is the sum over its surviving predecessors.  The
    DP therefore touches O((2d+1)^3) points at worst.
    """
    dist = displacement_metric(neighborhood)
    tx, ty, tz = target.as_tuple()
    total = dist(tx, ty, tz)
    if total == 0:
        return 1
    moves = sorted(m.as_tuple() for m in admissible_moves(neighborhood))
    layer: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for step in range(1, total + 1):
        remaining = total - step
        nxt: dict[tuple[int, int, int], int] = defaultdict(int)
        for (ux, uy, uz), ways in layer.items():
            for mx, my, mz in moves:
                vx, vy, vz = ux + mx, uy + my, uz + mz
                if (
                    dist(tx - vx, ty - vy, tz - vz) == remaining
                    and dist(vx, vy, vz) == step
                ):
                    nxt[(vx, vy, vz)] += ways
        layer = nxt
    return layer.get((tx, ty, tz), 0)


_MOVES_2D = tuple(
    sorted((dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0))
)


def oracle_count_2d(i: int, j: int) -> int:
    """Shortest chessboard paths from (0, 0) to (i, j): the same layered DP
    restricted to the 8 planar moves."""
    total = max(abs(i), abs(j))
    if total == 0:
        return 1
    layer: dict[tuple[int, int], int] = {(0, 0): 1}
    for step in range(1, total + 1):
        remaining = total - step
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (ux, uy), ways in layer.items():
            for mx, my in _MOVES_2D:
                vx, vy = ux + mx, uy + my
                if (
                    max(abs(i - vx), abs(j - vy)) == remaining
                    and max(abs(vx), abs(vy)) == step
                ):
                    nxt[(vx, vy)] += ways
        layer = nxt
    return layer.get((i, j), 0)


def iter_shortest_paths(
    target: GridPoint, neighborhood: Neighborhood
) -> Iterator[tuple[MoveStep, ...]]:
    """Yield every shortest path to ``target`` in lexicographic step order.

    Depth-first search with an explicit stack (geodesics can be thousands
    of steps long); a step is taken iff it decreases the remaining distance
    to the target by one, which prunes everything off-geodesic.
    """
    dist = displacement_metric(neighborhood)
    tx, ty, tz = target.as_tuple()
    total = dist(tx, ty, tz)
    if total == 0:
        yield ()
        return
    moves = sorted(admissible_moves(neighborhood))
    prefix: list[MoveStep] = []
    stack: list[tuple[tuple[int, int, int], int]] = [((0, 0, 0), 0)]
    while stack:
        (ux, uy, uz), next_index = stack[-1]
        remaining = total - len(prefix)
        if remaining == 0:
            yield tuple(prefix)
            stack.pop()
            prefix.pop()
            continue
        descended = False
        for index in range(next_index, len(moves)):
            step = moves[index]
            vx, vy, vz = ux + step.dx, uy + step.dy, uz + step.dz
            if dist(tx - vx, ty - vy, tz - vz) == remaining - 1:
                stack[-1] = ((ux, uy, uz), index + 1)
                prefix.append(step)
                stack.append(((vx, vy, vz), 0))
                descended = True
                break
        if not descended:
            stack.pop()
            if prefix:
                prefix.pop()


def enumerate_shortest_paths(
    target: GridPoint,
    neighborhood: Neighborhood,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> PathList:
    """Collect shortest paths up to ``limit``.

    If more than ``limit`` paths exist, exactly ``limit`` are returned and
    the result is marked truncated.  Counts explode with distance, so an
    unbounded enumeration is deliberately not offered.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    collected: list[tuple[MoveStep, ...]] = []
    truncated = False
    for path in iter_shortest_paths(target, neighborhood):
        if len(collected) == limit:
            truncated = True
            break
        collected.append(path)
    return PathList(
        target=target,
        neighborhood=neighborhood,
        paths=tuple(collected),
        truncated=truncated,
    )
