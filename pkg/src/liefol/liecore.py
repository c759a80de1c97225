"""Metric Lie algebras given by structure constants in an orthonormal basis.

Only the brackets ``[e_i, e_j]`` with ``i < j`` are stored; the rest follow
from antisymmetry. Coefficients are normally :class:`~fractions.Fraction`,
but every routine here only uses ring operations, so the symbolic module
reuses them with polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Mapping, Sequence

from liefol.ratlin import fmt_rat, parse_rat


class AlgebraError(ValueError):
    """Malformed structure-constant table or splitting."""


@dataclass(frozen=True, eq=True)
class MetricLieAlgebra:
    """Structure constants ``brackets[(i, j)]`` = coordinates of ``[e_i, e_j]``.

    The basis is orthonormal. Pairs missing from ``brackets`` bracket to zero.
    Jacobi is *not* checked here; see :func:`jacobi_check`.
    """

    basis: tuple[str, ...]
    brackets: Mapping[tuple[int, int], tuple] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        if not self.basis:
            raise AlgebraError("dimension must be positive")
        if len(set(self.basis)) != len(self.basis):
            raise AlgebraError(f"basis names are not distinct: {list(self.basis)}")
        n = len(self.basis)
        table = {}
        for (i, j), coeffs in self.brackets.items():
            if not (0 <= i < j < n):
                raise AlgebraError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {n}")
            coeffs = tuple(coeffs)
            if len(coeffs) != n:
                raise AlgebraError(f"bracket ({i}, {j}) has {len(coeffs)} coefficients, expected {n}")
            if any(c != 0 for c in coeffs):
                table[(i, j)] = coeffs
        object.__setattr__(self, "brackets", dict(sorted(table.items())))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        return self.basis.index(name)

    def unit(self, name_or_index) -> tuple[Fraction, ...]:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def zero(self):
        return (Fraction(0),) * self.dim

    def struct(self, i: int, j: int):
        """Coordinates of ``[e_i, e_j]`` for any ordered pair, or ``None`` if zero."""
        if i == j:
            return None
        if i < j:
            return self.brackets.get((i, j))
        c = self.brackets.get((j, i))
        return None if c is None else tuple(-x for x in c)

    @classmethod
    def from_names(cls, basis: Sequence[str], table: Mapping[tuple[str, str], Mapping[str, Any]]):
        """Build from ``{("A", "B"): {"C": 2}, ...}``; reversed pairs are negated."""
        basis = tuple(basis)
        n = len(basis)
        brackets: dict[tuple[int, int], list] = {}
        for (a, b), combo in table.items():
            i, j = basis.index(a), basis.index(b)
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in brackets:
                raise AlgebraError(f"bracket [{a}, {b}] given twice")
            coeffs = [Fraction(0)] * n
            for name, c in combo.items():
                coeffs[basis.index(name)] = coeffs[basis.index(name)] + sign * c
            brackets[(i, j)] = coeffs
        return cls(basis, {k: tuple(v) for k, v in brackets.items()})


@dataclass(frozen=True)
class Splitting:
    """Basis-adapted orthogonal splitting into vertical and horizontal blocks."""

    dim: int
    vertical: tuple[int, ...]

    def __post_init__(self):
        v = tuple(sorted(set(self.vertical)))
        if len(v) != len(tuple(self.vertical)):
            raise AlgebraError(f"vertical indices repeat: {list(self.vertical)}")
        if not v:
            raise AlgebraError("vertical block is empty")
        if v[0] < 0 or v[-1] >= self.dim:
            raise AlgebraError(f"vertical indices out of range for dimension {self.dim}")
        if len(v) == self.dim:
            raise AlgebraError("horizontal block is empty")
        object.__setattr__(self, "vertical", v)

    @property
    def horizontal(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.dim) if k not in self.vertical)

    @classmethod
    def from_names(cls, g: MetricLieAlgebra, names: Sequence[str]) -> "Splitting":
        return cls(g.dim, tuple(g.index(n) for n in names))


def _check_len(g: MetricLieAlgebra, *vs) -> None:
    for v in vs:
        if len(v) != g.dim:
            raise ValueError(f"vector has length {len(v)}, algebra has dimension {g.dim}")


def _accumulate(acc: list, c, coeffs) -> None:
    for k, ck in enumerate(coeffs):
        if ck != 0:
            acc[k] = acc[k] + c * ck


def bracket(g: MetricLieAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants."""
    _check_len(g, x, y)
    acc: list = [Fraction(0)] * g.dim
    for (i, j), coeffs in g.brackets.items():
        c = x[i] * y[j] - x[j] * y[i]
        if c != 0:
            _accumulate(acc, c, coeffs)
    return tuple(acc)


def ad_basis(g: MetricLieAlgebra, x: Sequence, k: int) -> tuple:
    """``[x, e_k]`` without forming the unit vector."""
    acc: list = [Fraction(0)] * g.dim
    for m, xm in enumerate(x):
        if xm != 0:
            c = g.struct(m, k)
            if c is not None:
                _accumulate(acc, xm, c)
    return tuple(acc)


def jacobi_defect(g: MetricLieAlgebra, i: int, j: int, k: int) -> tuple:
    """``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``."""
    if not (0 <= i < j < k < g.dim):
        raise ValueError(f"need 0 <= i < j < k < {g.dim}, got ({i}, {j}, {k})")
    out: list = [Fraction(0)] * g.dim
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        ab = g.struct(a, b)
        if ab is None:
            continue
        term = ad_basis(g, ab, c)
        for m, t in enumerate(term):
            if t != 0:
                out[m] = out[m] + t
    return tuple(out)


def jacobi_check(g: MetricLieAlgebra) -> list[tuple[tuple[int, int, int], tuple]]:
    """All triples ``i<j<k`` (lexicographic order) with a nonzero Jacobi defect."""
    bad = []
    for t in combinations(range(g.dim), 3):
        d = jacobi_defect(g, *t)
        if any(x != 0 for x in d):
            bad.append((t, d))
    return bad


def is_subalgebra(g: MetricLieAlgebra, s: Splitting) -> bool:
    horiz = s.horizontal
    for i, j in combinations(s.vertical, 2):
        c = g.struct(i, j)
        if c is not None and any(c[h] != 0 for h in horiz):
            return False
    return True


# -- JSON file format -------------------------------------------------------


def algebra_to_dict(g: MetricLieAlgebra, s: Splitting | None = None) -> dict:
    doc = {
        "dimension": g.dim,
        "basis": list(g.basis),
        "brackets": [
            {"i": i, "j": j, "coeffs": [fmt_rat(c) for c in coeffs]}
            for (i, j), coeffs in g.brackets.items()
        ],
    }
    if s is not None:
        doc["vertical"] = list(s.vertical)
    return doc


def algebra_from_dict(doc: Any) -> tuple[MetricLieAlgebra, Splitting | None]:
    """Inverse of :func:`algebra_to_dict`.

    Raises :class:`AlgebraError` with a JSON path in the message.
    """
    if not isinstance(doc, dict):
        raise AlgebraError("top level must be a JSON object")
    for key in ("dimension", "basis", "brackets"):
        if key not in doc:
            raise AlgebraError(f"missing key {key!r}")
    n = doc["dimension"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise AlgebraError("dimension: must be a positive integer")
    basis = doc["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise AlgebraError("basis: must be a list of strings")
    if len(basis) != n:
        raise AlgebraError(f"basis: has {len(basis)} names, dimension is {n}")
    if len(set(basis)) != n:
        raise AlgebraError("basis: names are not distinct")
    if not isinstance(doc["brackets"], list):
        raise AlgebraError("brackets: must be a list")
    table: dict[tuple[int, int], tuple] = {}
    for pos, entry in enumerate(doc["brackets"]):
        where = f"brackets[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "coeffs"}:
            raise AlgebraError(f"{where}: expected an object with keys i, j, coeffs")
        i, j, coeffs = entry["i"], entry["j"], entry["coeffs"]
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
            raise AlgebraError(f"{where}: i and j must be integers")
        if not (0 <= i < j < n):
            raise AlgebraError(f"{where}: index pair ({i}, {j}) out of range or not i < j")
        if (i, j) in table:
            raise AlgebraError(f"{where}: duplicate bracket ({i}, {j})")
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise AlgebraError(f"{where}: coeffs must be a list of length {n}")
        try:
            table[(i, j)] = tuple(parse_rat(c) for c in coeffs)
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraError(f"{where}: {exc}") from None
    g = MetricLieAlgebra(tuple(basis), table)
    split = None
    if "vertical" in doc:
        vert = doc["vertical"]
        if not isinstance(vert, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in vert):
            raise AlgebraError("vertical: must be a list of integers")
        split = Splitting(n, tuple(vert))
    return g, split
