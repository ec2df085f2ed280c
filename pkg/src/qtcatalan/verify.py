"""Exhaustive desk-scale checks of every structural claim in the package.

Each check scans all relevant objects up to the given bounds and records
the first counterexample, if any.  Everything is exact; there are no
tolerances.  max_mn bounds m+n for the general-(m,n) checks, max_n
bounds n for the three-column checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import bijection, paths, qtpoly, rankwords, stats


@dataclass
class CheckResult:
    name: str
    checked: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _coprime_pairs(max_mn: int):
    for total in range(2, max_mn + 1):
        for m in range(1, total):
            n = total - m
            if gcd(m, n) == 1:
                yield m, n


def _three_column_ns(max_n: int):
    return (n for n in range(1, max_n + 1) if n % 3 != 0)


def check_path_counts(max_mn: int) -> CheckResult:
    """Enumeration size equals binomial(m+n, m) / (m+n)."""
    checked = 0
    for m, n in _coprime_pairs(max_mn):
        checked += 1
        seen = sum(1 for _ in paths.enumerate_paths(m, n))
        want = paths.count_paths(m, n)
        if seen != want:
            return CheckResult(
                "path-count", checked, f"({m},{n}): enumerated {seen}, formula {want}"
            )
    return CheckResult("path-count", checked)


def check_serialization(max_mn: int) -> CheckResult:
    """parse_path inverts render_path on every path."""
    checked = 0
    for m, n in _coprime_pairs(max_mn):
        for p in paths.enumerate_paths(m, n):
            checked += 1
            if paths.parse_path(paths.render_path(p)) != p:
                return CheckResult(
                    "serialization-roundtrip", checked, f"{p.east_heights}"
                )
    return CheckResult("serialization-roundtrip", checked)


def check_shape_monotone(max_mn: int) -> CheckResult:
    """cells_above always yields weakly decreasing column counts."""
    checked = 0
    for m, n in _coprime_pairs(max_mn):
        for p in paths.enumerate_paths(m, n):
            checked += 1
            counts = paths.cells_above(p).counts
            if any(lo < hi for lo, hi in zip(counts, counts[1:])):
                return CheckResult("shape-monotone", checked, f"{p}: {counts}")
    return CheckResult("shape-monotone", checked)


def check_transpose(max_mn: int) -> CheckResult:
    """transpose is an involution preserving area and dinv."""
    checked = 0
    for m, n in _coprime_pairs(max_mn):
        for p in paths.enumerate_paths(m, n):
            checked += 1
            q = paths.transpose(p)
            if (q.m, q.n) != (n, m) or paths.transpose(q) != p:
                return CheckResult(
                    "transpose-involution", checked, f"{p.east_heights}"
                )
            if stats.area(q) != stats.area(p) or stats.dinv(q) != stats.dinv(p):
                return CheckResult(
                    "transpose-involution",
                    checked,
                    f"({m},{n}) {p.east_heights}: statistics changed",
                )
    return CheckResult("transpose-involution", checked)


def check_poly_mn_symmetry(max_mn: int) -> CheckResult:
    """catalan_bruteforce(m,n) = catalan_bruteforce(n,m)."""
    checked = 0
    for m, n in _coprime_pairs(max_mn):
        if m > n:
            continue
        checked += 1
        if qtpoly.catalan_bruteforce(m, n) != qtpoly.catalan_bruteforce(n, m):
            return CheckResult("poly-mn-symmetry", checked, f"({m},{n})")
    return CheckResult("poly-mn-symmetry", checked)


def check_rank_positivity(max_n: int) -> CheckResult:
    """Every cell above a (3,n)-path has positive rank."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            for x in paths.shape_cells(p):
                checked += 1
                if rankwords.rank(x.column, x.row, n) <= 0:
                    return CheckResult(
                        "rank-positivity", checked, f"n={n} cell {tuple(x)}"
                    )
    return CheckResult("rank-positivity", checked)


def check_cell_classification(max_n: int) -> CheckResult:
    """Each above-path cell gets exactly one label; label counts match skips."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            fenced = 0
            for x in paths.shape_cells(p):
                checked += 1
                contributes = stats.contributes_to_dinv(p, x)
                ar, lg = paths.arm(p, x), paths.leg(p, x)
                case1 = ar == 1 and 3 * (lg + 1) < n
                case2 = ar == 0 and 3 * lg > n
                if contributes + case1 + case2 != 1:
                    return CheckResult(
                        "cell-classification",
                        checked,
                        f"n={n} {p.east_heights} cell {tuple(x)}: labels not exclusive",
                    )
                if x.column == 2 and not contributes:
                    return CheckResult(
                        "cell-classification",
                        checked,
                        f"n={n} {p.east_heights} cell {tuple(x)}: second column must contribute",
                    )
                label = stats.classify_nondinv_cell(p, x)
                want = (
                    stats.CellClass.CONTRIBUTES
                    if contributes
                    else stats.CellClass.ARM1_SHORT_LEG
                    if case1
                    else stats.CellClass.ARM0_LONG_LEG
                )
                if label is not want:
                    return CheckResult(
                        "cell-classification",
                        checked,
                        f"n={n} {p.east_heights} cell {tuple(x)}: {label} != {want}",
                    )
                fenced += not contributes
            if fenced != stats.skips(p):
                return CheckResult(
                    "cell-classification",
                    checked,
                    f"n={n} {p.east_heights}: {fenced} fenced cells, skips {stats.skips(p)}",
                )
    return CheckResult("cell-classification", checked)


def check_stat_identity(max_n: int) -> CheckResult:
    """area + skips + dinv = n - 1."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            checked += 1
            a, s, d = stats.stat_triple(p)
            if a + s + d != n - 1:
                return CheckResult(
                    "stat-identity",
                    checked,
                    f"n={n} {p.east_heights}: {a}+{s}+{d} != {n - 1}",
                )
    return CheckResult("stat-identity", checked)


def check_stat_inequalities(max_n: int) -> CheckResult:
    """0 <= skips < n/3 and skips <= dinv, area <= n-1-2*skips."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            checked += 1
            a, s, d = stats.stat_triple(p)
            bad = (
                s < 0
                or 3 * s >= n
                or not s <= d <= n - 1 - 2 * s
                or not s <= a <= n - 1 - 2 * s
            )
            if bad:
                return CheckResult(
                    "stat-inequalities",
                    checked,
                    f"n={n} {p.east_heights}: triple ({a},{s},{d})",
                )
    return CheckResult("stat-inequalities", checked)


def check_triple_uniqueness(max_n: int) -> CheckResult:
    """Distinct paths of one lattice carry distinct triples."""
    checked = 0
    for n in _three_column_ns(max_n):
        seen: dict[stats.StatTriple, paths.DyckPath] = {}
        for p in paths.enumerate_paths(3, n):
            checked += 1
            t = stats.stat_triple(p)
            if t in seen:
                return CheckResult(
                    "triple-uniqueness",
                    checked,
                    f"n={n}: {seen[t].east_heights} and {p.east_heights} share {tuple(t)}",
                )
            seen[t] = p
    return CheckResult("triple-uniqueness", checked)


def check_word_roundtrip(max_n: int) -> CheckResult:
    """path_from_word inverts mark_from_path."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            checked += 1
            if rankwords.path_from_word(rankwords.mark_from_path(p)) != p:
                return CheckResult(
                    "word-roundtrip", checked, f"n={n} {p.east_heights}"
                )
    return CheckResult("word-roundtrip", checked)


def check_triple_reconstruction(max_n: int) -> CheckResult:
    """omega rebuilds each path's word; unboxed entries count the area."""
    checked = 0
    for n in _three_column_ns(max_n):
        for p in paths.enumerate_paths(3, n):
            checked += 1
            word = rankwords.mark_from_path(p)
            a, s, d = stats.stat_triple(p)
            if rankwords.omega(a, s, d) != word:
                return CheckResult(
                    "triple-reconstruction",
                    checked,
                    f"n={n} {p.east_heights}: omega({a},{s},{d}) differs",
                )
            unboxed = len(word) - len(word.boxed)
            if unboxed != a or rankwords.count_skips(word) != s:
                return CheckResult(
                    "triple-reconstruction",
                    checked,
                    f"n={n} {p.east_heights}: word statistics disagree",
                )
    return CheckResult("triple-reconstruction", checked)


def check_triple_realizability(max_n: int) -> CheckResult:
    """Valid triples and realized triples are the same sets."""
    checked = 0
    for n in _three_column_ns(max_n):
        realized = {
            tuple(stats.stat_triple(p)) for p in paths.enumerate_paths(3, n)
        }
        valid = {
            (a, s, d)
            for a in range(n)
            for s in range(n)
            for d in range(n)
            if a + s + d == n - 1 and rankwords.is_valid_triple(a, s, d)
        }
        checked += len(valid)
        if realized != valid:
            diff = realized.symmetric_difference(valid)
            return CheckResult(
                "triple-realizability", checked, f"n={n}: mismatch at {sorted(diff)[0]}"
            )
    return CheckResult("triple-realizability", checked)


def check_closed_form(max_n: int) -> CheckResult:
    """Brute-force summation agrees with the closed form."""
    checked = 0
    for n in _three_column_ns(max_n):
        checked += 1
        if qtpoly.catalan_bruteforce(3, n) != qtpoly.catalan3_closed_form(n):
            return CheckResult("closed-form", checked, f"n={n}")
    return CheckResult("closed-form", checked)


def check_qt_symmetry(max_n: int) -> CheckResult:
    """The closed form is symmetric in q and t."""
    checked = 0
    for n in _three_column_ns(max_n):
        checked += 1
        if not qtpoly.is_qt_symmetric(qtpoly.catalan3_closed_form(n)):
            return CheckResult("qt-symmetry", checked, f"n={n}")
    return CheckResult("qt-symmetry", checked)


def check_involution(max_n: int) -> CheckResult:
    """involution swaps area and dinv, fixes skips, and squares to the identity."""
    checked = 0
    for n in _three_column_ns(max_n):
        path_set = set(paths.enumerate_paths(3, n))
        for p in path_set:
            checked += 1
            q = bijection.involution(p)
            if q not in path_set:
                return CheckResult(
                    "involution", checked, f"n={n} {p.east_heights}: image not a path"
                )
            a, s, d = stats.stat_triple(p)
            if tuple(stats.stat_triple(q)) != (d, s, a):
                return CheckResult(
                    "involution",
                    checked,
                    f"n={n} {p.east_heights}: triple not swapped",
                )
            if bijection.involution(q) != p:
                return CheckResult(
                    "involution", checked, f"n={n} {p.east_heights}: not an involution"
                )
    return CheckResult("involution", checked)


# (name, check, which bound it takes)
CHECKS = [
    ("path-count", check_path_counts, "mn"),
    ("serialization-roundtrip", check_serialization, "mn"),
    ("shape-monotone", check_shape_monotone, "mn"),
    ("transpose-involution", check_transpose, "mn"),
    ("poly-mn-symmetry", check_poly_mn_symmetry, "mn"),
    ("rank-positivity", check_rank_positivity, "n"),
    ("cell-classification", check_cell_classification, "n"),
    ("stat-identity", check_stat_identity, "n"),
    ("stat-inequalities", check_stat_inequalities, "n"),
    ("triple-uniqueness", check_triple_uniqueness, "n"),
    ("word-roundtrip", check_word_roundtrip, "n"),
    ("triple-reconstruction", check_triple_reconstruction, "n"),
    ("triple-realizability", check_triple_realizability, "n"),
    ("closed-form", check_closed_form, "n"),
    ("qt-symmetry", check_qt_symmetry, "n"),
    ("involution", check_involution, "n"),
]


def run_all(max_n: int = 16, max_mn: int = 12) -> list[CheckResult]:
    """Run every check; a check that raises counts as a failure."""
    results = []
    for name, func, scope in CHECKS:
        bound = max_mn if scope == "mn" else max_n
        try:
            results.append(func(bound))
        except Exception as exc:
            results.append(
                CheckResult(name, 0, f"raised {type(exc).__name__}: {exc}")
            )
    return results
