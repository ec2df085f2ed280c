"""The area, dinv, and skips statistics on Dyck paths.

area counts the full cells between the path and the diagonal.  dinv
counts the cells x above the path whose arm/leg ratios straddle m/n:

    arm(x) / (leg(x) + 1)  <  m/n  <  (arm(x) + 1) / leg(x)

where the right-hand ratio reads as +infinity when leg(x) = 0.  All
comparisons are integer cross-multiplications; no floats anywhere.

skips applies to three-column paths only: it is the number of maximal
unboxed runs fenced by boxed entries in the marked rank word.  For a
(3,n)-path the three statistics always sum to n - 1, the length of the
rank word, because each above-path cell failing the straddle inequality
pairs off with exactly one skip.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .errors import UnsupportedM
from .paths import DyckPath, arm, leg, min_east_height, shape_cells
from .rankwords import count_skips, mark_from_path


class StatTriple(NamedTuple):
    area: int
    skips: int
    dinv: int


def area(p: DyckPath) -> int:
    """Full cells between the path and the diagonal."""
    return sum(
        y - min_east_height(a, p.m, p.n)
        for a, y in enumerate(p.east_heights, start=1)
    )


def contributes_to_dinv(p: DyckPath, x) -> bool:
    """Exact straddle test for one cell above the path."""
    ar, lg = arm(p, x), leg(p, x)
    if ar * p.n >= p.m * (lg + 1):  # arm/(leg+1) < m/n fails
        return False
    return lg == 0 or lg * p.m < p.n * (ar + 1)  # right side, +inf at leg 0


def dinv(p: DyckPath) -> int:
    """Cells above the path satisfying the straddle inequality."""
    return sum(1 for x in shape_cells(p) if contributes_to_dinv(p, x))


def skips(p: DyckPath) -> int:
    """Fenced unboxed runs in the marked rank word (three columns only)."""
    if p.m != 3:
        raise UnsupportedM(f"skips is defined for m = 3, not m = {p.m}")
    return count_skips(mark_from_path(p))


def stat_triple(p: DyckPath) -> StatTriple:
    """(area, skips, dinv) of a three-column path; always sums to n - 1."""
    return StatTriple(area(p), skips(p), dinv(p))


class CellClass(Enum):
    """How a cell above a three-column path relates to dinv."""

    CONTRIBUTES = "contributes"
    ARM1_SHORT_LEG = "arm1-short-leg"  # arm = 1 and leg < n/3 - 1
    ARM0_LONG_LEG = "arm0-long-leg"  # arm = 0 and leg > n/3


def classify_nondinv_cell(p: DyckPath, x) -> CellClass:
    """Label one cell above a three-column path.

    A cell failing the straddle inequality has either an east neighbour
    above the path with few cells below it (arm 1, leg < n/3 - 1) or no
    east neighbour and many cells below (arm 0, leg > n/3), never both.
    """
    if p.m != 3:
        raise UnsupportedM(f"cell classification needs m = 3, not m = {p.m}")
    if contributes_to_dinv(p, x):
        return CellClass.CONTRIBUTES
    ar, lg = arm(p, x), leg(p, x)
    if ar == 1 and 3 * (lg + 1) < p.n:
        return CellClass.ARM1_SHORT_LEG
    if ar == 0 and 3 * lg > p.n:
        return CellClass.ARM0_LONG_LEG
    raise AssertionError(f"cell {tuple(x)} fits no class")
