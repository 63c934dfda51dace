"""Value types shared by the whole package: grid points, connectivities,
unit steps and symmetry-reduced displacements."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product


@dataclass(frozen=True, order=True)
class GridPoint:
    """A point of the cubic grid Z^3. Coordinates are unbounded."""

    x: int
    y: int
    z: int

    def displacement_from(self, other: "GridPoint") -> tuple[int, int, int]:
        """Componentwise self - other."""
        return (self.x - other.x, self.y - other.y, self.z - other.z)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


ORIGIN = GridPoint(0, 0, 0)


class Neighborhood(Enum):
    """The three cubic-grid connectivities, named by neighbor count."""

    N6 = 6
    N18 = 18
    N26 = 26

    @property
    def step_cap(self) -> int:
        """How many coordinates a single step may change."""
        return _STEP_CAPS[self]

    @classmethod
    def from_token(cls, token: "str | int") -> "Neighborhood":
        try:
            return cls(int(token))
        except ValueError:
            raise ValueError(
                f"unknown neighborhood {token!r}: expected 6, 18 or 26"
            ) from None


_STEP_CAPS = {Neighborhood.N6: 1, Neighborhood.N18: 2, Neighborhood.N26: 3}


@dataclass(frozen=True, order=True)
class MoveStep:
    """A single step between neighboring grid points.

    Each component is -1, 0 or +1 and at least one is nonzero.  Steps order
    lexicographically on (dx, dy, dz) with -1 < 0 < 1; path enumeration
    relies on that ordering.
    """

    dx: int
    dy: int
    dz: int

    def __post_init__(self) -> None:
        if not all(c in (-1, 0, 1) for c in (self.dx, self.dy, self.dz)):
            raise ValueError(
                f"step components must be -1, 0 or 1: {(self.dx, self.dy, self.dz)}"
            )
        if self.dx == 0 and self.dy == 0 and self.dz == 0:
            raise ValueError("the null step is not a move")

    @property
    def weight(self) -> int:
        """Number of coordinates the step changes."""
        return abs(self.dx) + abs(self.dy) + abs(self.dz)

    def admissible_under(self, neighborhood: Neighborhood) -> bool:
        return self.weight <= neighborhood.step_cap

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.dx, self.dy, self.dz)


@lru_cache(maxsize=None)
def admissible_moves(neighborhood: Neighborhood) -> frozenset[MoveStep]:
    """The full move set of a connectivity: 6, 18 or 26 steps."""
    return frozenset(
        MoveStep(dx, dy, dz)
        for dx, dy, dz in product((-1, 0, 1), repeat=3)
        if (dx, dy, dz) != (0, 0, 0)
        and abs(dx) + abs(dy) + abs(dz) <= neighborhood.step_cap
    )


@dataclass(frozen=True)
class CanonicalOffset:
    """A displacement reduced by grid symmetry to i >= j >= k >= 0.

    Path counts are invariant under the 48 axis permutations and sign flips,
    so every counting formula works on the canonical triple only.  ``perm``
    maps canonical slot -> source axis and ``signs`` keeps each axis's
    original sign, which together recover the raw displacement.
    """

    i: int
    j: int
    k: int
    perm: tuple[int, int, int] = (0, 1, 2)
    signs: tuple[int, int, int] = (1, 1, 1)

    def __post_init__(self) -> None:
        if not self.i >= self.j >= self.k >= 0:
            raise ValueError(
                f"canonical offset needs i >= j >= k >= 0: {(self.i, self.j, self.k)}"
            )
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"perm must be a permutation of (0, 1, 2): {self.perm}")
        if not all(s in (-1, 1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1: {self.signs}")

    def as_triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def raw_displacement(self) -> tuple[int, int, int]:
        """Undo the reduction: place each magnitude back on its axis, signed."""
        magnitudes = (self.i, self.j, self.k)
        raw = [0, 0, 0]
        for slot, axis in enumerate(self.perm):
            raw[axis] = self.signs[axis] * magnitudes[slot]
        return (raw[0], raw[1], raw[2])


def canonicalize(p: GridPoint, q: GridPoint) -> CanonicalOffset:
    """Reduce the displacement p - q to its canonical offset.

    Magnitudes are sorted descending (ties broken by axis index, which makes
    the reduction idempotent) and the permutation/sign record is kept so the
    raw displacement can be reconstructed.
    """
    raw = p.displacement_from(q)
    signs = tuple(1 if c >= 0 else -1 for c in raw)
    perm = tuple(sorted((0, 1, 2), key=lambda axis: (-abs(raw[axis]), axis)))
    i, j, k = (abs(raw[axis]) for axis in perm)
    return CanonicalOffset(i, j, k, perm=perm, signs=signs)
