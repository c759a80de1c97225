"""Generators for the four parametrized families of metric Lie algebras.

Each generator returns the algebra together with the splitting whose
vertical block is the distinguished subalgebra. The coefficients of
``[X, Y]`` along the vertical block (except the free T-coefficient of the
mixed families) are derived from the parameters, never supplied.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

from liefol.liecore import MetricLieAlgebra, Splitting
from liefol.ratlin import fmt_rat, parse_rat

SEMISIMPLE_BASIS = ("A", "B", "C", "R", "S", "T", "X", "Y")
MIXED_BASIS = ("A", "B", "C", "T", "X", "Y")
HALF = Fraction(1, 2)


class ParamError(ValueError):
    pass


class _Params:
    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    @classmethod
    def from_dict(cls, d: dict) -> "_Params":
        unknown = sorted(set(d) - set(cls.names()))
        if unknown:
            raise ParamError(f"unknown parameter(s): {', '.join(unknown)}")
        vals = {}
        for k, v in d.items():
            try:
                vals[k] = parse_rat(v) if isinstance(v, str) else Fraction(v)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise ParamError(f"parameter {k}: {exc}") from None
        return cls(**vals)

    def to_dict(self) -> dict[str, str]:
        return {k: fmt_rat(getattr(self, k)) for k in self.names()}

    @classmethod
    def random(cls, rng: random.Random, bound: int = 10):
        return cls(**{k: random_rational(rng, bound) for k in cls.names()})


@dataclass(frozen=True)
class Semisimple13Params(_Params):
    b11: Fraction = Fraction(0)
    b21: Fraction = Fraction(0)
    c11: Fraction = Fraction(0)
    c12: Fraction = Fraction(0)
    c21: Fraction = Fraction(0)
    c22: Fraction = Fraction(0)
    s14: Fraction = Fraction(0)
    s24: Fraction = Fraction(0)
    t14: Fraction = Fraction(0)
    t15: Fraction = Fraction(0)
    t24: Fraction = Fraction(0)
    t25: Fraction = Fraction(0)
    rho: Fraction = Fraction(0)


@dataclass(frozen=True)
class Mixed11Params(_Params):
    b11: Fraction = Fraction(0)
    b21: Fraction = Fraction(0)
    c11: Fraction = Fraction(0)
    c12: Fraction = Fraction(0)
    c21: Fraction = Fraction(0)
    c22: Fraction = Fraction(0)
    x1: Fraction = Fraction(0)
    x2: Fraction = Fraction(0)
    y1: Fraction = Fraction(0)
    rho: Fraction = Fraction(0)
    theta4: Fraction = Fraction(0)


def random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    """Numerator in [-bound, bound], denominator in [-bound, bound] minus zero."""
    num = rng.randint(-bound, bound)
    den = rng.choice([d for d in range(-bound, bound + 1) if d != 0])
    return Fraction(num, den)


# -- semisimple families ----------------------------------------------------


def _abc_block(p, sign: int) -> dict:
    """ad of X, Y on the {A, B, C} block; ``sign`` is -1 for sl(2,R) with [B,C] = -2A."""
    b11, b21, c11, c12, c21, c22 = p.b11, p.b21, p.c11, p.c12, p.c21, p.c22
    s = sign
    return {
        ("A", "X"): {"B": -s * b11, "C": -s * c11},
        ("A", "Y"): {"B": -s * b21, "C": -s * c21},
        ("B", "X"): {"A": b11, "C": -c12},
        ("B", "Y"): {"A": b21, "C": -c22},
        ("C", "X"): {"A": c11, "B": c12},
        ("C", "Y"): {"A": c21, "B": c22},
    }


def _abc_thetas(p, sign: int) -> tuple[Fraction, Fraction, Fraction]:
    rho, b11, b21, c11, c12, c21, c22 = p.rho, p.b11, p.b21, p.c11, p.c12, p.c21, p.c22
    s = sign
    return (
        HALF * (-rho * c12 + s * (b11 * c21 - b21 * c11)),
        HALF * (s * rho * c11 + s * (b11 * c22 - b21 * c12)),
        HALF * s * (-rho * b11 + c11 * c22 - c12 * c21),
    )


def _semisimple(p: Semisimple13Params, rst_sign: int) -> tuple[MetricLieAlgebra, Splitting]:
    s14, s24, t14, t15, t24, t25 = p.s14, p.s24, p.t14, p.t15, p.t24, p.t25
    rst = _abc_block(
        Semisimple13Params(b11=s14, b21=s24, c11=t14, c12=t15, c21=t24, c22=t25, rho=p.rho), rst_sign
    )
    rst = {(_RST[a], b): {_RST[k]: v for k, v in combo.items()} for (a, b), combo in rst.items()}
    th1, th2, th3 = _abc_thetas(p, 1)
    th4, th5, th6 = _abc_thetas(
        Semisimple13Params(b11=s14, b21=s24, c11=t14, c12=t15, c21=t24, c22=t25, rho=p.rho), rst_sign
    )
    table = {
        ("A", "B"): {"C": 2},
        ("C", "A"): {"B": 2},
        ("B", "C"): {"A": 2},
        ("R", "S"): {"T": 2},
        ("T", "R"): {"S": 2},
        ("S", "T"): {"R": 2 * rst_sign},
        **_abc_block(p, 1),
        **rst,
        ("X", "Y"): {"X": p.rho, "A": th1, "B": th2, "C": th3, "R": th4, "S": th5, "T": th6},
    }
    g = MetricLieAlgebra.from_names(SEMISIMPLE_BASIS, table)
    return g, Splitting(8, tuple(range(6)))


_RST = {"A": "R", "B": "S", "C": "T"}


def gen_su2_su2(p: Semisimple13Params) -> tuple[MetricLieAlgebra, Splitting]:
    return _semisimple(p, 1)


def gen_su2_sl2(p: Semisimple13Params) -> tuple[MetricLieAlgebra, Splitting]:
    return _semisimple(p, -1)


# -- mixed families ---------------------------------------------------------


def _mixed(p: Mixed11Params, sign: int) -> tuple[MetricLieAlgebra, Splitting]:
    b11, b21, c11, c12, c21, c22 = p.b11, p.b21, p.c11, p.c12, p.c21, p.c22
    x1, x2, y1, rho = p.x1, p.x2, p.y1, p.rho
    s = sign
    th1, th2, th3 = _abc_thetas(p, sign)
    table = {
        ("A", "B"): {"C": 2},
        ("C", "A"): {"B": 2},
        ("B", "C"): {"A": 2 * s},
        **_abc_block(p, sign),
        ("T", "X"): {
            "X": x1,
            "Y": y1,
            "A": HALF * (-c12 * x1 - c22 * y1),
            "B": HALF * s * (c11 * x1 + c21 * y1),
            "C": HALF * s * (-b11 * x1 - b21 * y1),
        },
        ("T", "Y"): {
            "X": x2,
            "Y": -x1,
            "A": HALF * (-c12 * x2 + c22 * x1),
            "B": HALF * s * (c11 * x2 - c21 * x1),
            "C": HALF * s * (-b11 * x2 + b21 * x1),
            "T": -rho,
        },
        ("X", "Y"): {"X": rho, "A": th1, "B": th2, "C": th3, "T": p.theta4},
    }
    g = MetricLieAlgebra.from_names(MIXED_BASIS, table)
    return g, Splitting(6, (0, 1, 2, 3))


def gen_su2_so2(p: Mixed11Params) -> tuple[MetricLieAlgebra, Splitting]:
    return _mixed(p, 1)


def gen_sl2_so2(p: Mixed11Params) -> tuple[MetricLieAlgebra, Splitting]:
    return _mixed(p, -1)


FAMILIES = {
    "su2su2": (Semisimple13Params, gen_su2_su2),
    "su2sl2": (Semisimple13Params, gen_su2_sl2),
    "su2so2": (Mixed11Params, gen_su2_so2),
    "sl2so2": (Mixed11Params, gen_sl2_so2),
}


def generate(name: str, params: dict | None = None):
    try:
        cls, gen = FAMILIES[name]
    except KeyError:
        raise ParamError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    return gen(cls.from_dict(params or {}))


def load_params(name: str, path: str | Path) -> _Params:
    cls, _ = FAMILIES[name]
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(doc, dict):
        raise ParamError("parameter file must hold a JSON object")
    return cls.from_dict(doc)
