"""Exact sparse polynomials in q and t, and two routes to C_{m,n}(q,t).

catalan_bruteforce sums q^dinv t^area over every (m,n)-Dyck path.  For
m = 3 the same polynomial has a closed form: q^(n-a-s-1) t^a summed over
0 <= s <= floor(n/3) and s <= a <= n-2s-1.  The two routes stay separate
so each can check the other.

Coefficients and evaluation results are capped at 2^63 - 1 so that JSON
output stays exact for consumers with 64-bit integers; exceeding the cap
raises CoefficientOverflow instead of silently degrading.
"""

from __future__ import annotations

from typing import Mapping

from .errors import BadResidue, CoefficientOverflow
from . import paths, stats

COEFFICIENT_LIMIT = 2**63 - 1


class QtPolynomial:
    """Finitely many terms c * q^i * t^j with nonnegative integer c, i, j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (dq, dt), c in (terms or {}).items():
            if dq < 0 or dt < 0:
                raise ValueError(f"exponents must be nonnegative: q^{dq} t^{dt}")
            if c < 0:
                raise ValueError(f"coefficients must be nonnegative: {c}")
            if c > COEFFICIENT_LIMIT:
                raise CoefficientOverflow(
                    f"coefficient {c} exceeds {COEFFICIENT_LIMIT}"
                )
            if c:
                clean[(int(dq), int(dt))] = int(c)
        self._terms = clean

    def coefficient(self, dq: int, dt: int) -> int:
        return self._terms.get((dq, dt), 0)

    def terms(self) -> list[tuple[int, int, int]]:
        """(dq, dt, coefficient) triples in graded-lex order.

        Total degree descending, then q-degree descending; the fixed
        order keeps rendered and serialized output byte-stable.
        """
        order = sorted(self._terms, key=lambda e: (-(e[0] + e[1]), -e[0]))
        return [(dq, dt, self._terms[dq, dt]) for dq, dt in order]

    def __add__(self, other: "QtPolynomial") -> "QtPolynomial":
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        summed = dict(self._terms)
        for key, c in other._terms.items():
            summed[key] = summed.get(key, 0) + c
        return QtPolynomial(summed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QtPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"QtPolynomial({self.render()!r})"

    def evaluate(self, q0: int, t0: int) -> int:
        """Exact value at integer (q0, t0)."""
        value = sum(c * q0**dq * t0**dt for (dq, dt), c in self._terms.items())
        if abs(value) > COEFFICIENT_LIMIT:
            raise CoefficientOverflow(
                f"value at ({q0}, {t0}) leaves the 64-bit range"
            )
        return value

    def render(self) -> str:
        """Human-readable sum in graded-lex term order; "0" when empty."""
        if not self._terms:
            return "0"
        chunks = []
        for dq, dt, c in self.terms():
            factors = []
            if c != 1 or (dq == 0 and dt == 0):
                factors.append(str(c))
            if dq:
                factors.append("q" if dq == 1 else f"q^{dq}")
            if dt:
                factors.append("t" if dt == 1 else f"t^{dt}")
            chunks.append(" ".join(factors))
        return " + ".join(chunks)

    def json_terms(self) -> list[dict[str, int]]:
        """Term list for JSON output, in the same order as render."""
        return [{"q": dq, "t": dt, "c": c} for dq, dt, c in self.terms()]


def catalan_bruteforce(m: int, n: int) -> QtPolynomial:
    """Sum q^dinv t^area over all (m,n)-Dyck paths."""
    counts: dict[tuple[int, int], int] = {}
    for p in paths.enumerate_paths(m, n):
        key = (stats.dinv(p), stats.area(p))
        counts[key] = counts.get(key, 0) + 1
    return QtPolynomial(counts)


def catalan3_closed_form(n: int) -> QtPolynomial:
    """C_{3,n}(q,t) summed directly over the valid statistic triples."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 3 == 0:
        raise BadResidue(f"n must not be a multiple of 3, got {n}")
    counts: dict[tuple[int, int], int] = {}
    for s in range(n // 3 + 1):
        for a in range(s, n - 2 * s):
            key = (n - a - s - 1, a)
            counts[key] = counts.get(key, 0) + 1
    return QtPolynomial(counts)


def is_qt_symmetric(p: QtPolynomial) -> bool:
    """Whether swapping q and t exponents leaves the polynomial unchanged."""
    return all(c == p.coefficient(dt, dq) for dq, dt, c in p.terms())
