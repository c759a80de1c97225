from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from liefol.ratlin import fmt_rat, matvec, parse_rat, rref, solve_linear
from conftest import rationals


def test_rref_rank_one():
    red, piv = rref([[1, 2], [2, 4]])
    assert red == ((1, 2), (0, 0))
    assert piv == [0]


def test_rref_identity():
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    red, piv = rref(eye)
    assert red == tuple(tuple(r) for r in eye)
    assert piv == [0, 1, 2]


def test_rref_swap():
    assert rref([[0, 1], [1, 0]]) == (((1, 0), (0, 1)), [0, 1])


def test_rref_empty():
    assert rref([]) == ((), [])


def test_rref_ragged():
    with pytest.raises(ValueError):
        rref([[1, 2], [3]])


def test_solve_unique():
    sol = solve_linear([[1, 0], [0, 1]], [3, 4])
    assert sol.kind == "unique"
    assert sol.particular == (3, 4)


def test_solve_parametric():
    sol = solve_linear([[1, 1]], [2])
    assert sol.kind == "parametric"
    assert sol.particular == (2, 0)
    assert sol.nullspace == ((-1, 1),)


def test_solve_inconsistent():
    assert solve_linear([[1], [1]], [0, 1]).kind == "inconsistent"


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear([[1, 0]], [1, 2])


@pytest.mark.parametrize("q, s", [(Q(0), "0"), (Q(-3), "-3"), (Q(6, -4), "-3/2"), (Q(7, 21), "1/3")])
def test_fmt_rat(q, s):
    assert fmt_rat(q) == s
    assert parse_rat(s) == q


@pytest.mark.parametrize("bad", ["1.5", "a", "1/0", "", "1/-2", " / "])
def test_parse_rat_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rat(bad)


def test_parse_rat_normalizes():
    assert parse_rat("2/4") == Q(1, 2)
    assert fmt_rat(parse_rat("2/4")) == "1/2"


@given(rationals(), rationals(), rationals())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(st.lists(st.lists(rationals(5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rref_idempotent(m):
    red, piv = rref(m)
    assert rref(red) == (red, piv)


@given(
    st.lists(st.lists(rationals(5), min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(rationals(5), min_size=3, max_size=3),
)
def test_solutions_satisfy_system(a, b):
    sol = solve_linear(a, b)
    if sol.kind == "inconsistent":
        return
    assert matvec(a, sol.particular) == tuple(b)
    for v in sol.nullspace:
        assert all(x == 0 for x in matvec(a, v))
