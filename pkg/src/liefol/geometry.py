"""Levi-Civita connection and second fundamental forms of a splitting.

All fields are left-invariant and the basis is orthonormal, so the Koszul
formula reduces to structure constants:

    <nabla_{e_i} e_j, e_k> = 1/2 (<[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from liefol.liecore import MetricLieAlgebra, Splitting, is_subalgebra, jacobi_check
from liefol.ratlin import fmt_rat

HALF = Fraction(1, 2)


class JacobiError(ValueError):
    """The bracket table is not a Lie algebra."""

    def __init__(self, violations):
        self.violations = violations
        triples = ", ".join(str(t) for t, _ in violations[:5])
        more = "" if len(violations) <= 5 else f" (+{len(violations) - 5} more)"
        super().__init__(f"Jacobi identity fails on {len(violations)} triple(s): {triples}{more}")


class NotIntegrableError(ValueError):
    """The vertical block does not span a subalgebra."""


@dataclass(frozen=True)
class ConnectionTable:
    """``gamma[i][j][k] = <nabla_{e_i} e_j, e_k>``."""

    gamma: tuple

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def nabla(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.gamma[i][j]


@dataclass(frozen=True)
class SecondFundamentalForms:
    """``bv[(i, j)]`` for vertical ``i <= j`` and ``bh[(a, b)]`` for horizontal ``a <= b``.

    Values are full-length coordinate vectors; bv lives in the horizontal
    block and bh in the vertical one.
    """

    splitting: Splitting
    bv: dict
    bh: dict

    def bv_at(self, i: int, j: int):
        return self.bv[(min(i, j), max(i, j))]

    def bh_at(self, a: int, b: int):
        return self.bh[(min(a, b), max(a, b))]


@dataclass(frozen=True)
class ClassificationReport:
    integrable: bool
    conformal: bool
    riemannian: bool
    minimal: bool
    totally_geodesic: bool
    mean_curvature: tuple
    conformal_vector: Optional[tuple]
    forms: SecondFundamentalForms

    def to_dict(self) -> dict:
        def vec(v):
            return [fmt_rat(c) for c in v]

        return {
            "integrable": self.integrable,
            "conformal": self.conformal,
            "riemannian": self.riemannian,
            "minimal": self.minimal,
            "totally_geodesic": self.totally_geodesic,
            "mean_curvature": vec(self.mean_curvature),
            "conformal_vector": None if self.conformal_vector is None else vec(self.conformal_vector),
            "bv": {f"{i},{j}": vec(v) for (i, j), v in self.forms.bv.items()},
            "bh": {f"{i},{j}": vec(v) for (i, j), v in self.forms.bh.items()},
        }


def _inner_bracket(g: MetricLieAlgebra, i: int, j: int, k: int) -> Fraction:
    c = g.struct(i, j)
    return Fraction(0) if c is None else c[k]


def koszul(g: MetricLieAlgebra, *, check: bool = True) -> ConnectionTable:
    if check:
        bad = jacobi_check(g)
        if bad:
            raise JacobiError(bad)
    n = g.dim
    gamma = tuple(
        tuple(
            tuple(
                HALF * (_inner_bracket(g, i, j, k) - _inner_bracket(g, j, k, i) + _inner_bracket(g, k, i, j))
                for k in range(n)
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return ConnectionTable(gamma)


def _sym_projected(conn: ConnectionTable, i: int, j: int, onto) -> tuple:
    out = [Fraction(0)] * conn.dim
    for k in onto:
        out[k] = HALF * (conn.gamma[i][j][k] + conn.gamma[j][i][k])
    return tuple(out)


def second_forms(
    g: MetricLieAlgebra, s: Splitting, conn: ConnectionTable | None = None
) -> SecondFundamentalForms:
    if s.dim != g.dim:
        raise ValueError(f"splitting is for dimension {s.dim}, algebra has {g.dim}")
    if not is_subalgebra(g, s):
        raise NotIntegrableError("not integrable: vertical block is not a subalgebra")
    if conn is None:
        conn = koszul(g)
    bv = {(i, j): _sym_projected(conn, i, j, s.horizontal) for i, j in combinations_with_replacement(s.vertical, 2)}
    bh = {(a, b): _sym_projected(conn, a, b, s.vertical) for a, b in combinations_with_replacement(s.horizontal, 2)}
    return SecondFundamentalForms(s, bv, bh)


def mean_curvature(forms: SecondFundamentalForms) -> tuple:
    """Trace of bv over the vertical orthonormal basis."""
    n = forms.splitting.dim
    acc = [Fraction(0)] * n
    for i in forms.splitting.vertical:
        for k, c in enumerate(forms.bv[(i, i)]):
            acc[k] += c
    return tuple(acc)


def bv_direct(g: MetricLieAlgebra, s: Splitting, i: int, j: int) -> tuple:
    """bv(e_i, e_j) from 1/2 sum_a (<[X_a,e_i],e_j> + <[X_a,e_j],e_i>) X_a.

    Independent of the connection table; used to cross-check it.
    """
    out = [Fraction(0)] * g.dim
    for a in s.horizontal:
        out[a] = HALF * (_inner_bracket(g, a, i, j) + _inner_bracket(g, a, j, i))
    return tuple(out)


def classify(g: MetricLieAlgebra, s: Splitting) -> ClassificationReport:
    if not is_subalgebra(g, s):
        raise NotIntegrableError("not integrable: vertical block is not a subalgebra")
    forms = second_forms(g, s, koszul(g))
    horiz = s.horizontal
    off_diag_zero = all(all(c == 0 for c in forms.bh[(a, b)]) for a, b in forms.bh if a != b)
    diag = {forms.bh[(a, a)] for a in horiz}
    conformal = off_diag_zero and len(diag) == 1
    conformal_vector = forms.bh[(horiz[0], horiz[0])] if conformal else None
    riemannian = conformal and all(c == 0 for c in conformal_vector)
    h = mean_curvature(forms)
    return ClassificationReport(
        integrable=True,
        conformal=conformal,
        riemannian=riemannian,
        minimal=all(c == 0 for c in h),
        totally_geodesic=all(all(c == 0 for c in v) for v in forms.bv.values()),
        mean_curvature=h,
        conformal_vector=conformal_vector,
        forms=forms,
    )
