import random
from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, strategies as st

from liefol.families import FAMILIES
from liefol.liecore import jacobi_check
from liefol.symbolic import (
    BRANCHES,
    InconsistentSystem,
    Polynomial,
    build_ansatz,
    jacobi_equations,
    jacobi_system,
    parse_poly,
    reduce_linear,
    reduce_template,
    specialize,
    substitute,
    verify_identically_zero,
)
from conftest import rationals

P = parse_poly
VARS = ["rho", "theta2", "a11", "b21", "c12", "x1", "y2"]


@st.composite
def polys(draw, max_terms=4):
    out = Polynomial()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(rationals(9))
        mono = Polynomial.const(c)
        for v in draw(st.lists(st.sampled_from(VARS), max_size=3)):
            mono = mono * Polynomial.var(v)
        out = out + mono
    return out


def to_sympy(p: Polynomial):
    syms = {v: sympy.Symbol(v) for v in VARS}
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            t *= syms[v] ** e
        expr += t
    return sympy.expand(expr)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(polys(), polys())
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
    assert sympy.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0


@given(polys())
def test_print_parse_round_trip(p):
    assert parse_poly(str(p)) == p


def test_canonical_print():
    p = P("1/2*b11*c21") - P("1/2*b21*c11") + P("-1/2*c12*rho")
    assert str(p) == "-1/2*rho*c12 + 1/2*b11*c21 - 1/2*b21*c11"
    assert str(Polynomial()) == "0"
    assert str(P("x1^2 - 3 + x1*y1")) == "x1^2 + x1*y1 - 3"


def test_equality_is_representation():
    assert P("x1 + y1") == P("y1 + x1")
    assert hash(P("x1 + y1")) == hash(P("y1 + x1"))
    assert P("x1") != P("y1")


def test_subs_simultaneous():
    p = P("x1 + 2*y1")
    assert p.subs({"x1": P("y1"), "y1": P("x1")}) == P("y1 + 2*x1")
    assert P("x1 + y1").subs({"x1": Polynomial()}) == P("y1")
    assert p.subs({}) == p


def test_isolatable():
    assert sorted(P("2*x1 + y1*c12 + c12").isolatable()) == ["x1"]
    assert P("x1*y1 - 1").isolatable() == []


# -- ansatz -----------------------------------------------------------------


def test_ansatz_su2su2_counts():
    sa = build_ansatz("su2su2")
    assert sa.dim == 8
    ad = [v for v in sa.variables if v[0] in "abcrst" and v[1:].isdigit()]
    assert len(ad) == 72
    assert sorted(set(sa.variables) - set(ad)) == sorted(["rho"] + [f"theta{k}" for k in range(1, 7)])
    assert sa.coeff("A", "X", "B") == P("a12")
    assert sa.coeff("A", "B", "C") == 2
    assert sa.coeff("X", "Y", "Y") == 0


def test_ansatz_su2so2_counts():
    sa = build_ansatz("su2so2")
    assert sa.dim == 6
    assert len(sa.variables) == 24 + 8 + 4 + 1 + 4
    assert sa.coeff("T", "Y", "Y") == P("y2")
    assert sa.coeff("T", "X", "A") == P("t11")
    assert sa.coeff("A", "T", "A") == 0


def test_ansatz_generic():
    sa = build_ansatz(("generic", 3, (0,)))
    assert len(sa.variables) == 9
    assert all(not Polynomial.coerce(c).is_constant() for v in sa.algebra.brackets.values() for c in v)
    assert build_ansatz("generic:3:0").variables == sa.variables


def test_ansatz_unknown():
    with pytest.raises(ValueError):
        build_ansatz("g2")


def _eq(sa, triple, coord):
    idx = tuple(sa.algebra.index(n) for n in triple)
    for e in jacobi_equations(sa):
        if e.origin == idx and e.coord == sa.algebra.index(coord):
            return e.poly
    return Polynomial()


def test_jacobi_abx():
    sa = build_ansatz("su2su2")
    assert _eq(sa, "ABX", "A") == P("2*c11 + 2*a13")
    assert _eq(sa, "ABX", "C") == P("2*c13 - 2*a11 - 2*b12")
    assert _eq(sa, "ABX", "R") == P("2*c14")


def test_jacobi_abc_silent():
    sa = build_ansatz("su2su2")
    assert not any(e.origin == (0, 1, 2) for e in jacobi_equations(sa))


def test_jacobi_axy_after_linear_stratum():
    sa = build_ansatz("su2su2")
    _, res = reduce_template("su2su2")
    linear = {k: v for k, v in res.substitutions.items() if not k.startswith("theta")}
    part = substitute(sa, linear)
    assert _eq(part, "AXY", "C") == P("rho*c11 + b11*c22 - b21*c12 - 2*theta2")
    assert _eq(part, "AXY", "B") == P("rho*b11 - c11*c22 + c21*c12 + 2*theta3")


# -- reduction ----------------------------------------------------------------


def test_reduce_trivial():
    r = reduce_linear([P("x1 + y1"), P("x1 - y1")])
    assert r.substitutions == {"x1": Polynomial(), "y1": Polynomial()}
    assert r.residual == [] and r.free == []


def test_reduce_no_linear_stratum():
    r = reduce_linear([P("x1*y1 - 1")])
    assert r.substitutions == {}
    assert r.residual == [P("x1*y1 - 1")]
    assert r.free == ["x1", "y1"]


def test_reduce_isolates_inside_nonlinear():
    r = reduce_linear([P("2*theta1 + rho*c12"), P("x1*y1")])
    assert r.substitutions == {"theta1": P("-1/2*rho*c12")}
    assert r.residual == [P("x1*y1")]


def test_reduce_inconsistent():
    with pytest.raises(InconsistentSystem) as exc:
        reduce_linear([("eq-a", P("x1 - 1")), ("eq-b", P("x1 - 2"))])
    assert exc.value.origins == ["eq-a", "eq-b"]


def test_reduce_inconsistent_after_substitution():
    with pytest.raises(InconsistentSystem):
        reduce_linear([P("x1 - 1"), P("x1*y1 - y1 + 1")])


def test_reduce_su2su2_substitutions():
    _, r = reduce_template("su2su2")
    s = r.substitutions
    for v in ("a11", "b12", "c13", "a21", "b22", "c23", "r14", "s15", "t16", "r24", "s25", "t26"):
        assert s[v] == 0
    assert s["a12"] == P("-b11") and s["a13"] == P("-c11") and s["b13"] == P("-c12")
    assert s["r15"] == P("-s14") and s["r16"] == P("-t14") and s["s16"] == P("-t15")
    assert str(s["theta1"]) == "-1/2*rho*c12 + 1/2*b11*c21 - 1/2*b21*c11"
    assert r.free == ["rho", "b11", "b21", "c11", "c12", "c21", "c22", "s14", "s24", "t14", "t15", "t24", "t25"]
    assert r.residual == []


def test_reduce_triangular():
    for t in ("su2su2", "sl2so2"):
        _, r = reduce_template(t)
        solved = set(r.substitutions)
        assert all(not (p.variables() & solved) for p in r.substitutions.values())


def test_substitution_idempotent():
    sa = build_ansatz("su2sl2")
    _, r = reduce_template("su2sl2")
    once = substitute(sa, r.substitutions)
    assert substitute(once, r.substitutions).algebra == once.algebra
    assert substitute(sa, {}).algebra == sa.algebra


def test_reduced_table_uses_only_free_parameters():
    red, r = reduce_template("su2su2")
    used = set()
    for v in red.algebra.brackets.values():
        for c in v:
            used |= Polynomial.coerce(c).variables()
    assert used == set(r.free)


def test_verify_detects_unsubstituted_theta1():
    sa = build_ansatz("su2su2")
    _, r = reduce_template("su2su2")
    partial = {k: v for k, v in r.substitutions.items() if k != "theta1"}
    defects = verify_identically_zero(substitute(sa, partial))
    assert defects
    target = P("theta1") - r.substitutions["theta1"]
    for d in defects:
        assert "theta1" in d.variables()
        ratio = d.linear_coefficient("theta1")
        assert d == target * ratio
    origins = {e.origin for e in jacobi_equations(substitute(sa, partial))}
    X, Y = 6, 7
    assert all(X in o and Y in o for o in origins)


@pytest.mark.parametrize("template", ["su2so2", "sl2so2"])
def test_mixed_branch_finds_y2(template):
    _, r = reduce_template(template)
    assert r.substitutions["y2"] == P("-x1")
    assert r.substitutions["t24"] == P("-rho")
    assert r.substitutions["t14"] == 0
    assert [str(a) for a in r.assumptions] == ["t14", "rho + t24", "x1 + y2"]


@pytest.mark.parametrize("template", ["su2so2", "sl2so2"])
def test_mixed_without_branch_leaves_residual(template):
    red, r = reduce_template(template, branch=False)
    assert len(r.residual) == 6
    assert r.free == ["rho", "theta4", "b11", "b21", "c11", "c12", "c21", "c22", "t14", "t24", "x1", "x2", "y1", "y2"]
    assert {"y2", "t14", "t24"} <= set().union(*(p.variables() for p in r.residual))
    assert P("rho*y2 + t14*x2 - t24*x1") in r.residual


def test_mixed_family_is_one_branch():
    red, r = reduce_template("su2so2", branch=False)
    vals = {v: Q(0) for v in r.free}
    vals.update(x1=Q(1), y2=Q(5))
    g = specialize(red, vals)
    assert jacobi_check(g) == []
    assert vals["y2"] != -vals["x1"]


@pytest.mark.parametrize("template", ["su2su2", "su2so2"])
def test_reduction_preserves_solutions(template):
    # points built from the substitutions solve the original system; points
    # that break a substitution do not (unless by accident)
    sa = build_ansatz(template)
    _, r = reduce_template(template)
    system = jacobi_system(sa) + list(r.assumptions)
    rng = random.Random(11)
    for k in range(20):
        free = {v: Q(rng.randint(-9, 9), rng.randint(1, 9)) for v in r.free}
        point = dict(free)
        point.update({v: p.evaluate(free) for v, p in r.substitutions.items()})
        assert all(p.evaluate(point) == 0 for p in system)
        bumped = dict(point)
        bumped["theta1"] += 1
        assert any(p.evaluate(bumped) != 0 for p in system)


def test_specialize_matches_generators_smoke():
    red, r = reduce_template("sl2so2")
    cls, gen = FAMILIES["sl2so2"]
    rng = random.Random(3)
    p = cls.random(rng)
    assert specialize(red, {k: getattr(p, k) for k in r.free}) == gen(p)[0]


def test_to_dict_format():
    _, r = reduce_template("su2su2")
    d = r.to_dict()
    assert d["substitutions"]["theta1"] == "-1/2*rho*c12 + 1/2*b11*c21 - 1/2*b21*c11"
    assert d["assumptions"] == [] and d["residual"] == []
    assert len(d["free"]) == 13
