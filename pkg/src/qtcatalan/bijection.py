"""The involution exchanging area and dinv while fixing skips.

Statistic triples determine three-column paths uniquely, and swapping
area with dinv maps valid triples to valid triples, so the exchange is
realized by reconstructing the path of the swapped triple.  Applied to
every path of a fixed n it permutes the path set and proves the q,t
symmetry of C_{3,n}.
"""

from __future__ import annotations

from .paths import DyckPath
from .rankwords import omega, path_from_word
from . import stats


def involution(p: DyckPath) -> DyckPath:
    """The unique (3,n)-path whose triple is (dinv(p), skips(p), area(p))."""
    t = stats.stat_triple(p)
    return path_from_word(omega(t.dinv, t.skips, t.area))
