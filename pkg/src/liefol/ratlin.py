"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator. Vectors are tuples of fractions and matrices are
tuples of row tuples, so every value here is immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


def fmt_rat(q) -> str:
    """Serialize as ``"p"`` or ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with a nonzero denominator.

    Non-canonical input such as ``"2/4"`` is accepted and normalized.
    """
    if not isinstance(s, str) or not _RAT_RE.match(s.strip()):
        raise ValueError(f"bad rational string: {s!r}")
    value = Fraction(s.strip())  # raises ZeroDivisionError on p/0
    return value


def vec(entries) -> RatVector:
    return tuple(Fraction(x) for x in entries)


def mat(rows) -> RatMatrix:
    rows = tuple(vec(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    return rows


def zeros(n: int) -> RatVector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> RatVector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(x: Sequence, y: Sequence) -> RatVector:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def scale(c, x: Sequence) -> RatVector:
    return tuple(c * a for a in x)


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def matvec(a: Sequence[Sequence], x: Sequence) -> RatVector:
    return tuple(dot(row, x) for row in a)


def is_zero(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def rref(m: Sequence[Sequence]) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken left to right, using the first row at or below the
    current pivot row with a nonzero entry in that column.
    """
    rows = [list(map(Fraction, r)) for r in m]
    if not rows:
        return (), []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        if prow == len(rows):
            break
        hit = next((r for r in range(prow, len(rows)) if rows[r][col] != 0), None)
        if hit is None:
            continue
        rows[prow], rows[hit] = rows[hit], rows[prow]
        piv = rows[prow][col]
        if piv != 1:
            rows[prow] = [a / piv for a in rows[prow]]
        for r in range(len(rows)):
            f = rows[r][col]
            if r != prow and f != 0:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[prow])]
        pivots.append(col)
        prow += 1
    return tuple(tuple(r) for r in rows), pivots


@dataclass(frozen=True)
class LinearSolution:
    """Solution set of ``a x = b``.

    ``kind`` is ``"unique"``, ``"parametric"`` or ``"inconsistent"``. For the
    first two, ``particular`` is the solution with all free coordinates zero;
    ``nullspace`` has one basis vector per free column, in column order.
    """

    kind: str
    particular: RatVector | None = None
    nullspace: tuple[RatVector, ...] = ()


def solve_linear(a: Sequence[Sequence], b: Sequence) -> LinearSolution:
    if len(a) != len(b):
        raise ValueError(f"system has {len(a)} rows but rhs has {len(b)} entries")
    if not a:
        raise ValueError("empty system")
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return LinearSolution("inconsistent")
    particular = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        particular[col] = red[r][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -red[r][f]
        basis.append(tuple(v))
    if not free:
        return LinearSolution("unique", tuple(particular))
    return LinearSolution("parametric", tuple(particular), tuple(basis))
