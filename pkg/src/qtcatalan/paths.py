"""Rational Dyck paths on an m-by-n rectangle.

A path takes unit north and east steps from (0,0) to (m,n), with
gcd(m,n) = 1, and stays weakly above the rectangle diagonal y = (n/m)x.
Coprimality keeps every interior lattice point off the diagonal, so
"weakly above" is the exact ceiling condition y_a >= ceil(a*n/m) on the
height y_a of the a-th east step.  The height list (y_1, ..., y_m) is the
canonical representation; the {N,E} step word is only a serialization.
Note y_m = n always: the final east step runs along the top edge.

Cells are addressed (column, row), both 1-based, rows numbered bottom to
top, so cell (1,1) rests on the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BadCharacter,
    BelowDiagonal,
    CellNotAboveThePath,
    NotCoprime,
    NotMonotone,
)


class Cell(NamedTuple):
    column: int
    row: int


def min_east_height(a: int, m: int, n: int) -> int:
    """Lowest admissible height of the a-th east step: ceil(a*n/m)."""
    return -(-a * n // m)


@dataclass(frozen=True)
class DyckPath:
    """An (m,n)-Dyck path stored as its east-step heights.

    east_heights[a-1] is the number of north steps taken before the a-th
    east step.  Validation runs on construction, so every instance in
    hand is a genuine path.
    """

    m: int
    n: int
    east_heights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "east_heights", tuple(self.east_heights))
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if gcd(self.m, self.n) != 1:
            raise NotCoprime(f"gcd({self.m}, {self.n}) != 1")
        if len(self.east_heights) != self.m:
            raise ValueError(
                f"expected {self.m} east heights, got {len(self.east_heights)}"
            )
        prev = 0
        for y in self.east_heights:
            if y < prev or y > self.n:
                raise NotMonotone(
                    f"heights must weakly increase within 0..{self.n}: "
                    f"{self.east_heights}"
                )
            prev = y
        for a, y in enumerate(self.east_heights, start=1):
            floor = min_east_height(a, self.m, self.n)
            if y < floor:
                raise BelowDiagonal(
                    f"east step {a} at height {y} dips below the diagonal "
                    f"(needs >= {floor})"
                )


def make_path(m: int, n: int, east_heights: Iterable[int]) -> DyckPath:
    """Validate and build a path from its east-step heights."""
    return DyckPath(m, n, tuple(east_heights))


def parse_path(word: str) -> DyckPath:
    """Read a step word over {N, E}, e.g. "NNENNEE" for the (3,4)-path (2,4,4)."""
    heights = []
    north = 0
    for ch in word:
        if ch == "N":
            north += 1
        elif ch == "E":
            heights.append(north)
        else:
            raise BadCharacter(f"step words use only N and E, found {ch!r}")
    return DyckPath(len(heights), north, tuple(heights))


def render_path(p: DyckPath) -> str:
    """Serialize to the step word; inverse of parse_path."""
    parts = []
    prev = 0
    for y in p.east_heights:
        parts.append("N" * (y - prev))
        parts.append("E")
        prev = y
    return "".join(parts)


def count_paths(m: int, n: int) -> int:
    """Number of (m,n)-Dyck paths: binomial(m+n, m) / (m+n)."""
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    return comb(m + n, m) // (m + n)


def enumerate_paths(m: int, n: int) -> Iterator[DyckPath]:
    """Yield every (m,n)-Dyck path once, in lexicographic height order."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    floors = [min_east_height(a, m, n) for a in range(1, m + 1)]
    heights = [0] * m

    def extend(a: int, prev: int) -> Iterator[DyckPath]:
        if a == m:
            yield DyckPath(m, n, tuple(heights))
            return
        for y in range(max(prev, floors[a]), n + 1):
            heights[a] = y
            yield from extend(a + 1, y)

    yield from extend(0, 0)


@dataclass(frozen=True)
class FerrersShape:
    """Cells above a path, as weakly decreasing per-column counts."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("column counts must be nonnegative")
        if any(lo < hi for lo, hi in zip(self.counts, self.counts[1:])):
            raise ValueError(f"column counts must weakly decrease: {self.counts}")

    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


def cells_above(p: DyckPath) -> FerrersShape:
    """Per-column counts of the cells strictly above the path (n - y_a)."""
    return FerrersShape(tuple(p.n - y for y in p.east_heights))


def shape_cells(p: DyckPath) -> tuple[Cell, ...]:
    """Every cell above the path, column by column, lowest row first."""
    return tuple(
        Cell(a, b)
        for a, y in enumerate(p.east_heights, start=1)
        for b in range(y + 1, p.n + 1)
    )


def _as_shape_cell(p: DyckPath, x) -> Cell:
    column, row = x
    if not (1 <= column <= p.m and 1 <= row <= p.n):
        raise CellNotAboveThePath(f"cell ({column}, {row}) is outside the lattice")
    if row <= p.east_heights[column - 1]:
        raise CellNotAboveThePath(f"cell ({column}, {row}) lies below the path")
    return Cell(column, row)


def arm(p: DyckPath, x) -> int:
    """Cells above the path strictly east of x in its row."""
    x = _as_shape_cell(p, x)
    return sum(1 for y in p.east_heights[x.column:] if y < x.row)


def leg(p: DyckPath, x) -> int:
    """Cells above the path strictly south of x in its column."""
    x = _as_shape_cell(p, x)
    return x.row - 1 - p.east_heights[x.column - 1]


_SWAP_NE = str.maketrans("NE", "EN")


def transpose(p: DyckPath) -> DyckPath:
    """The complementary (n,m)-path: reverse the step word, swap N and E."""
    word = render_path(p)
    return parse_path(word[::-1].translate(_SWAP_NE))
