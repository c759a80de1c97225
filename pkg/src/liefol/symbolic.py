"""Polynomials over Q and the linear Jacobi-constraint reducer.

A bracket table whose coefficients are polynomials in named unknowns is a
:class:`SymbolicAlgebra`. Its Jacobi defects give a polynomial system;
:func:`reduce_linear` peels off every equation that can be solved for a
variable with a constant coefficient and back-substitutes until nothing
changes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from liefol.liecore import MetricLieAlgebra, Splitting, jacobi_defect
from liefol.ratlin import fmt_rat, parse_rat, rref

# -- variables and monomials ------------------------------------------------

_GREEK = ("rho", "theta")
_NAME_RE = re.compile(r"^([A-Za-z_]+?)(\d*)$")


def var_key(name: str):
    """Variable order used for monomials: rho, then theta*, then natural order."""
    m = _NAME_RE.match(name)
    stem, digits = (m.group(1), m.group(2)) if m else (name, "")
    rank = _GREEK.index(stem) if stem in _GREEK else len(_GREEK)
    return (rank, stem, int(digits) if digits else -1, name)


Monomial = tuple  # tuple[tuple[str, int], ...] sorted by var_key


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda t: var_key(t[0])))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial):
    # ascending sort of this key lists the graded-lex largest monomial first
    return (-_mono_degree(m), tuple((var_key(v), -e) for v, e in m))


class Polynomial:
    """Immutable multivariate polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c != 0:
                clean[mono] = Fraction(c)
        self._terms = dict(sorted(clean.items(), key=lambda t: _grlex_key(t[0])))
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({(): Fraction(c)})

    @staticmethod
    def coerce(x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return Polynomial.const(x)
        return NotImplemented

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    # arithmetic
    def __add__(self, other):
        other = Polynomial.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = Polynomial.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self._terms.items()})
        other = Polynomial.coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # inspection
    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def linear_coefficient(self, name: str) -> Fraction:
        return self._terms.get(((name, 1),), Fraction(0))

    def isolatable(self) -> list[str]:
        """Variables that occur only as a bare degree-1 term (constant coefficient)."""
        seen: dict[str, bool] = {}
        for m in self._terms:
            for v, e in m:
                ok = len(m) == 1 and e == 1
                seen[v] = seen.get(v, True) and ok
        return [v for v, ok in seen.items() if ok]

    def subs(self, mapping: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Simultaneous substitution."""
        if not mapping or not (self.variables() & set(mapping)):
            return self
        out = Polynomial()
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    term = term * Polynomial.coerce(mapping[v]) ** e
                else:
                    rest.append((v, e))
            out = out + term * Polynomial({tuple(rest): Fraction(1)})
        return out

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t *= Fraction(values[v]) ** e
            total += t
        return total

    # printing
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in m]
            if not factors:
                body = fmt_rat(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([fmt_rat(mag)] + factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str) -> Polynomial:
    """Inverse of ``str(Polynomial)``."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    out = Polynomial()
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        term = Polynomial.const(sign)
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                term = term * parse_rat(factor)
            else:
                name, _, exp = factor.partition("^")
                if not _NAME_RE.match(name):
                    raise ValueError(f"bad variable name {name!r}")
                term = term * Polynomial.var(name) ** (int(exp) if exp else 1)
        out = out + term
        pos = m.end()
    return out


# -- symbolic algebras --------------------------------------------------------


@dataclass(frozen=True)
class SymbolicAlgebra:
    """Bracket table with polynomial coefficients.

    ``variables`` lists the unknowns in declaration order; ``prefer_free``
    names the parameters the reducer should keep free when it has a choice.
    """

    algebra: MetricLieAlgebra
    variables: tuple[str, ...] = ()
    splitting: Splitting | None = None
    prefer_free: tuple[str, ...] = ()
    template: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis(self) -> tuple[str, ...]:
        return self.algebra.basis

    def coeff(self, a: str, b: str, c: str) -> Polynomial:
        """Coefficient of basis element ``c`` in ``[a, b]``."""
        g = self.algebra
        v = g.struct(g.index(a), g.index(b))
        return Polynomial() if v is None else Polynomial.coerce(v[g.index(c)])


@dataclass(frozen=True)
class Equation:
    poly: Polynomial
    origin: tuple[int, int, int]
    coord: int


def _v(name: str) -> Polynomial:
    return Polynomial.var(name)


_SEMISIMPLE_PARAMS = ("b11", "b21", "c11", "c12", "c21", "c22", "s14", "s24", "t14", "t15", "t24", "t25", "rho")
_MIXED_PARAMS = ("b11", "b21", "c11", "c12", "c21", "c22", "x1", "x2", "y1", "rho", "theta4")


def _semisimple_ansatz(rst_sign: int, template: str) -> SymbolicAlgebra:
    basis = ("A", "B", "C", "R", "S", "T", "X", "Y")
    vert = basis[:6]
    variables: list[str] = []
    table: dict = {
        ("A", "B"): {"C": 2},
        ("C", "A"): {"B": 2},
        ("B", "C"): {"A": 2},
        ("R", "S"): {"T": 2},
        ("T", "R"): {"S": 2},
        ("S", "T"): {"R": 2 * rst_sign},
    }
    for e in vert:
        letter = e.lower()
        for row, h in ((1, "X"), (2, "Y")):
            combo = {}
            for col, target in enumerate(vert, start=1):
                name = f"{letter}{row}{col}"
                variables.append(name)
                combo[target] = _v(name)
            table[(e, h)] = combo
    xy = {"X": _v("rho")}
    variables.append("rho")
    for k, target in enumerate(vert, start=1):
        xy[target] = _v(f"theta{k}")
        variables.append(f"theta{k}")
    table[("X", "Y")] = xy
    g = MetricLieAlgebra.from_names(basis, table)
    return SymbolicAlgebra(g, tuple(variables), Splitting(8, tuple(range(6))), _SEMISIMPLE_PARAMS, template)


def _mixed_ansatz(sign: int, template: str) -> SymbolicAlgebra:
    basis = ("A", "B", "C", "T", "X", "Y")
    vert = basis[:4]
    variables: list[str] = []
    table: dict = {
        ("A", "B"): {"C": 2},
        ("C", "A"): {"B": 2},
        ("B", "C"): {"A": 2 * sign},
    }
    for e in ("A", "B", "C"):
        letter = e.lower()
        for row, h in ((1, "X"), (2, "Y")):
            combo = {}
            for col, target in enumerate(vert, start=1):
                name = f"{letter}{row}{col}"
                variables.append(name)
                combo[target] = _v(name)
            table[(e, h)] = combo
    for row, h in ((1, "X"), (2, "Y")):
        combo = {"X": _v(f"x{row}"), "Y": _v(f"y{row}")}
        variables += [f"x{row}", f"y{row}"]
        for col, target in enumerate(vert, start=1):
            name = f"t{row}{col}"
            variables.append(name)
            combo[target] = _v(name)
        table[("T", h)] = combo
    xy = {"X": _v("rho")}
    variables.append("rho")
    for k, target in enumerate(vert, start=1):
        xy[target] = _v(f"theta{k}")
        variables.append(f"theta{k}")
    table[("X", "Y")] = xy
    g = MetricLieAlgebra.from_names(basis, table)
    return SymbolicAlgebra(g, tuple(variables), Splitting(6, tuple(range(4))), _MIXED_PARAMS, template)


def _generic_ansatz(dim: int, vertical: Sequence[int]) -> SymbolicAlgebra:
    basis = tuple(f"e{i}" for i in range(dim))
    variables = []
    table = {}
    for i, j in combinations(range(dim), 2):
        coeffs = []
        for k in range(dim):
            name = f"g{i}_{j}_{k}"
            variables.append(name)
            coeffs.append(_v(name))
        table[(i, j)] = tuple(coeffs)
    return SymbolicAlgebra(
        MetricLieAlgebra(basis, table), tuple(variables), Splitting(dim, tuple(vertical)), (), f"generic({dim})"
    )


TEMPLATES = ("su2su2", "su2sl2", "su2so2", "sl2so2")


def build_ansatz(template) -> SymbolicAlgebra:
    """Ansatz for one of :data:`TEMPLATES`, or ``("generic", dim, vertical)``.

    Template strings ``"generic:3:0"`` / ``"generic:4:0,1"`` are also accepted.
    """
    if isinstance(template, str) and template.startswith("generic:"):
        _, dim, vert = template.split(":")
        template = ("generic", int(dim), tuple(int(v) for v in vert.split(",") if v))
    if isinstance(template, tuple) and template and template[0] == "generic":
        return _generic_ansatz(template[1], template[2])
    builders = {
        "su2su2": lambda: _semisimple_ansatz(1, "su2su2"),
        "su2sl2": lambda: _semisimple_ansatz(-1, "su2sl2"),
        "su2so2": lambda: _mixed_ansatz(1, "su2so2"),
        "sl2so2": lambda: _mixed_ansatz(-1, "sl2so2"),
    }
    if template not in builders:
        raise ValueError(f"unknown template {template!r}; choose from {', '.join(TEMPLATES)} or generic:DIM:V")
    return builders[template]()


# -- Jacobi system --------------------------------------------------------------


def jacobi_equations(sa: SymbolicAlgebra) -> list[Equation]:
    g = sa.algebra
    eqs = []
    for t in combinations(range(g.dim), 3):
        for coord, c in enumerate(jacobi_defect(g, *t)):
            p = Polynomial.coerce(c)
            if not p.is_zero():
                eqs.append(Equation(p, t, coord))
    return eqs


def jacobi_system(sa: SymbolicAlgebra) -> list[Polynomial]:
    """Every nonzero defect coordinate, triples in lexicographic order."""
    return [e.poly for e in jacobi_equations(sa)]


def substitute(sa: SymbolicAlgebra, subs: Mapping[str, Polynomial]) -> SymbolicAlgebra:
    g = sa.algebra
    table = {k: tuple(Polynomial.coerce(c).subs(subs) for c in v) for k, v in g.brackets.items()}
    remaining = tuple(v for v in sa.variables if v not in subs)
    return SymbolicAlgebra(MetricLieAlgebra(g.basis, table), remaining, sa.splitting, sa.prefer_free, sa.template)


def specialize(sa: SymbolicAlgebra, values: Mapping[str, Fraction]) -> MetricLieAlgebra:
    """Evaluate every coefficient at rational values."""
    g = sa.algebra
    table = {k: tuple(Polynomial.coerce(c).evaluate(values) for c in v) for k, v in g.brackets.items()}
    return MetricLieAlgebra(g.basis, table)


def verify_identically_zero(sa: SymbolicAlgebra) -> list[Polynomial]:
    """Nonzero Jacobi defect coordinates; empty iff Jacobi holds identically."""
    return jacobi_system(sa)


# -- linear reduction -------------------------------------------------------------


class InconsistentSystem(ValueError):
    def __init__(self, origins):
        self.origins = sorted(origins)
        super().__init__(f"linear stratum is inconsistent; contradiction traced to triples {self.origins}")


@dataclass
class ReductionResult:
    substitutions: dict[str, Polynomial]
    residual: list[Polynomial]
    free: list[str]
    assumptions: list[Polynomial] = field(default_factory=list)
    origins: dict[str, list] = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict:
        return {
            "assumptions": [str(p) for p in self.assumptions],
            "substitutions": {k: str(v) for k, v in self.substitutions.items()},
            "residual": [str(p) for p in self.residual],
            "free": list(self.free),
        }


def _as_pairs(system) -> list[tuple[Polynomial, frozenset]]:
    pairs = []
    for n, item in enumerate(system):
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], str):
            pairs.append((Polynomial.coerce(item[1]), frozenset([item[0]])))
        elif isinstance(item, Equation):
            pairs.append((item.poly, frozenset([item.origin])))
        else:
            pairs.append((Polynomial.coerce(item), frozenset([n])))
    return pairs


def reduce_linear(
    system: Iterable,
    *,
    prefer_free: Sequence[str] = (),
    variables: Sequence[str] | None = None,
) -> ReductionResult:
    """Solve the linear stratum of ``system`` and back-substitute to a fixpoint.

    ``system`` holds polynomials (each meaning ``p = 0``), :class:`Equation`
    objects, or ``(label, polynomial)`` pairs; triples and labels are reported
    on inconsistency. Pivot variables are
    picked by name, smallest first, except that names in ``prefer_free`` go
    last. ``variables`` fixes the universe used for the free list; by default
    it is every variable in the system.
    """
    keep = set(prefer_free)

    def pivot_key(v):
        return (v in keep, v)

    eqs = _as_pairs(system)
    universe = set(variables) if variables is not None else set().union(*(p.variables() for p, _ in eqs))
    subs: dict[str, Polynomial] = {}
    used: dict[str, frozenset] = {}

    while True:
        live = []
        for p, org in eqs:
            if p.is_zero():
                continue
            if p.is_constant():
                raise InconsistentSystem(_flatten(org))
            live.append((p, org))
        eqs = live

        new: dict[str, Polynomial] = {}
        new_org: dict[str, frozenset] = {}
        affine = [(p, org) for p, org in eqs if p.degree() == 1]
        if affine:
            cols = sorted(set().union(*(p.variables() for p, _ in affine)), key=pivot_key)
            rows = [[p.linear_coefficient(v) for v in cols] + [-p.constant_term()] for p, _ in affine]
            red, pivots = rref(rows)
            batch_org = frozenset().union(*(org for _, org in affine))
            if len(cols) in pivots:
                raise InconsistentSystem(_flatten(batch_org))
            for r, pc in enumerate(pivots):
                rhs = Polynomial.const(red[r][-1])
                for c, v in enumerate(cols):
                    if c != pc and red[r][c] != 0:
                        rhs = rhs - red[r][c] * _v(v)
                new[cols[pc]] = rhs
                new_org[cols[pc]] = batch_org
        else:
            best = None
            for p, org in eqs:
                for v in p.isolatable():
                    if best is None or pivot_key(v) < pivot_key(best[0]):
                        best = (v, p, org)
            if best is None:
                break
            v, p, org = best
            c = p.linear_coefficient(v)
            new[v] = (p - c * _v(v)) * Fraction(-1, 1) * (1 / c)
            new_org[v] = org

        subs = {k: s.subs(new) for k, s in subs.items()}
        subs.update(new)
        used.update(new_org)
        eqs = [(p.subs(new), org | frozenset().union(*(new_org[v] for v in p.variables() & set(new)))) for p, org in eqs]

    solved = set(subs)
    free = sorted((universe | set().union(*(s.variables() for s in subs.values()))) - solved, key=var_key)
    ordered = dict(sorted(subs.items(), key=lambda t: var_key(t[0])))
    return ReductionResult(ordered, [p for p, _ in eqs], free, {k: _flatten(v) for k, v in used.items()})


def _flatten(origins) -> list:
    return sorted(origins, key=lambda o: (type(o).__name__, o))


# Jacobi alone leaves t14, t24, y2 tied by quadratic relations in the mixed
# templates; the published families are the branch on which ad_T, ad_X and
# ad_Y are traceless. Other branches exist (e.g. [T,X] = X, [T,Y] = 5Y).
BRANCHES: dict[str, tuple[str, ...]] = {
    "su2so2": ("t14", "t24 + rho", "x1 + y2"),
    "sl2so2": ("t14", "t24 + rho", "x1 + y2"),
}


def reduce_template(template, *, branch: bool = True) -> tuple[SymbolicAlgebra, ReductionResult]:
    """Build the ansatz, reduce its Jacobi system, and return the reduced table.

    With ``branch`` the template's entry in :data:`BRANCHES` is appended to the
    system as extra linear equations and listed in ``result.assumptions``.
    """
    sa = build_ansatz(template)
    extra = [parse_poly(e) for e in BRANCHES.get(sa.template, ())] if branch else []
    system = list(jacobi_equations(sa)) + [("assumption", p) for p in extra]
    result = reduce_linear(system, prefer_free=sa.prefer_free, variables=sa.variables)
    result.assumptions = extra
    return substitute(sa, result.substitutions), result
