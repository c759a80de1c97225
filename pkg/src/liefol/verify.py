"""Seeded property checks of the four families against their published classification.

Every family gets ``draws`` unconstrained parameter draws plus a fixed set of
constrained ones (the locus where the interesting verdicts flip). Each check
is a predicate over one draw; the report counts passes per check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from liefol.families import FAMILIES, Mixed11Params, Semisimple13Params
from liefol.geometry import ClassificationReport, ConnectionTable, bv_direct, classify, koszul
from liefol.liecore import MetricLieAlgebra, Splitting, jacobi_check

Q = Fraction
ZERO = Q(0)
QUARTER = Q(1, 4)


@dataclass
class Instance:
    params: object
    algebra: MetricLieAlgebra
    splitting: Splitting
    conn: ConnectionTable
    report: ClassificationReport

    def vec(self, **coords) -> tuple:
        out = [ZERO] * self.algebra.dim
        for name, c in coords.items():
            out[self.algebra.index(name)] = Q(c)
        return tuple(out)

    def bv(self, a: str, b: str) -> tuple:
        g = self.algebra
        return self.report.forms.bv_at(g.index(a), g.index(b))

    def bh(self, a: str, b: str) -> tuple:
        g = self.algebra
        return self.report.forms.bh_at(g.index(a), g.index(b))


def build_instance(family: str, params) -> Instance:
    _, gen = FAMILIES[family]
    g, s = gen(params)
    conn = koszul(g)
    return Instance(params, g, s, conn, classify(g, s))


# -- draws ------------------------------------------------------------------


def semisimple_constrained(rng: random.Random, n: int = 10) -> list[Semisimple13Params]:
    return [replace(Semisimple13Params.random(rng), s14=ZERO, s24=ZERO, t14=ZERO, t24=ZERO) for _ in range(n)]


def mixed_constrained(rng: random.Random, n: int = 20) -> list[Mixed11Params]:
    """Conformal draws (x1 = 0, x2 = -y1), cycling through sub-loci."""
    out = []
    for k in range(n):
        p = Mixed11Params.random(rng)
        p = replace(p, x1=ZERO, x2=-p.y1)
        if k % 4 == 0:
            p = replace(p, rho=ZERO)
        elif k % 4 == 1:
            p = replace(p, rho=ZERO, y1=ZERO, x2=ZERO)
        elif k % 4 == 2:
            p = replace(p, rho=ZERO, b11=ZERO, b21=ZERO, c11=ZERO, c21=ZERO)
        out.append(p)
    return out


def family_draws(family: str, seed: int, draws: int) -> list:
    rng = random.Random(f"{seed}:{family}")
    cls, _ = FAMILIES[family]
    base = [cls.random(rng) for _ in range(draws)]
    extra = semisimple_constrained(rng) if cls is Semisimple13Params else mixed_constrained(rng)
    return base + extra


# -- predicates ----------------------------------------------------------------


def connection_identities_hold(inst: Instance) -> bool:
    gam = inst.conn.gamma
    g = inst.algebra
    n = g.dim
    for i in range(n):
        for j in range(n):
            br = g.struct(i, j)
            for k in range(n):
                if gam[i][j][k] + gam[i][k][j] != 0:
                    return False
                if gam[i][j][k] - gam[j][i][k] != (ZERO if br is None else br[k]):
                    return False
    return True


def oracle_agrees(inst: Instance) -> bool:
    s = inst.splitting
    return all(inst.report.forms.bv[(i, j)] == bv_direct(inst.algebra, s, i, j) for i, j in inst.report.forms.bv)


def bv_zero_except(inst: Instance, allowed: set) -> bool:
    g = inst.algebra
    for (i, j), v in inst.report.forms.bv.items():
        if (g.basis[i], g.basis[j]) not in allowed and any(v):
            return False
    return True


def is_conformal_locus(p) -> bool:
    return p.x1 == 0 and p.y1 + p.x2 == 0


def _common(inst: Instance) -> dict[str, bool]:
    return {
        "jacobi": not jacobi_check(inst.algebra),
        "connection identities": connection_identities_hold(inst),
        "bv oracle agreement": oracle_agrees(inst),
        "report logic": (not inst.report.totally_geodesic or inst.report.minimal)
        and (not inst.report.riemannian or inst.report.conformal),
    }


def checks_su2su2(inst: Instance) -> dict[str, bool]:
    r = inst.report
    return {
        **_common(inst),
        "riemannian": r.riemannian,
        "totally geodesic": r.totally_geodesic and all(not any(v) for v in r.forms.bv.values()),
    }


def checks_su2sl2(inst: Instance) -> dict[str, bool]:
    r, p = inst.report, inst.params
    tg_expected = p.s14 == p.s24 == p.t14 == p.t24 == 0
    return {
        **_common(inst),
        "riemannian": r.riemannian,
        "minimal": r.minimal,
        "bv(R,S) = -s14 X - s24 Y": inst.bv("R", "S") == inst.vec(X=-p.s14, Y=-p.s24),
        "bv(R,T) = -t14 X - t24 Y": inst.bv("R", "T") == inst.vec(X=-p.t14, Y=-p.t24),
        "other bv vanish": bv_zero_except(inst, {("R", "S"), ("R", "T")}),
        "totally geodesic iff s14=s24=t14=t24=0": r.totally_geodesic == tg_expected,
    }


def _mixed_common(inst: Instance) -> dict[str, bool]:
    r, p = inst.report, inst.params
    return {
        **_common(inst),
        "conformal iff x1=0 and y1+x2=0": r.conformal == is_conformal_locus(p),
        "riemannian iff conformal": r.riemannian == r.conformal,
        "minimal iff rho=0": r.minimal == (p.rho == 0),
        "bh(X,X) = x1 T": inst.bh("X", "X") == inst.vec(T=p.x1),
        "bh(Y,Y) = -x1 T": inst.bh("Y", "Y") == inst.vec(T=-p.x1),
        "bh(X,Y) = (y1+x2)/2 T": inst.bh("X", "Y") == inst.vec(T=(p.y1 + p.x2) / 2),
        "bv(T,T) = rho Y": inst.bv("T", "T") == inst.vec(Y=p.rho),
    }


def _conformal_only(pred: Callable[[Instance], bool]) -> Callable[[Instance], bool | None]:
    def wrapped(inst: Instance):
        return pred(inst) if is_conformal_locus(inst.params) else None

    return wrapped


def checks_su2so2(inst: Instance) -> dict[str, bool | None]:
    p = inst.params
    y = p.y1 * QUARTER
    tg = p.rho == 0 and all(p.y1 * c == 0 for c in (p.b11, p.b21, p.c11, p.c12, p.c21, p.c22))
    return {
        **_mixed_common(inst),
        "conformal: bv(A,T) = y1/4 (c22 X - c12 Y)": _conformal_only(
            lambda i: i.bv("A", "T") == i.vec(X=y * p.c22, Y=-y * p.c12)
        )(inst),
        "conformal: bv(B,T) = y1/4 (-c21 X + c11 Y)": _conformal_only(
            lambda i: i.bv("B", "T") == i.vec(X=-y * p.c21, Y=y * p.c11)
        )(inst),
        "conformal: bv(C,T) = y1/4 (b21 X - b11 Y)": _conformal_only(
            lambda i: i.bv("C", "T") == i.vec(X=y * p.b21, Y=-y * p.b11)
        )(inst),
        "conformal: totally geodesic iff rho = y1*b,c = 0": _conformal_only(
            lambda i: i.report.totally_geodesic == tg
        )(inst),
    }


def checks_sl2so2(inst: Instance) -> dict[str, bool | None]:
    p = inst.params
    y = p.y1 * QUARTER
    tg = p.rho == p.b11 == p.b21 == p.c11 == p.c21 == 0 and p.y1 * p.c12 == 0 and p.y1 * p.c22 == 0
    return {
        **_mixed_common(inst),
        "bv(A,B) = -b11 X - b21 Y": inst.bv("A", "B") == inst.vec(X=-p.b11, Y=-p.b21),
        "bv(A,C) = -c11 X - c21 Y": inst.bv("A", "C") == inst.vec(X=-p.c11, Y=-p.c21),
        "conformal: bv(A,T) = y1/4 (c22 X - c12 Y)": _conformal_only(
            lambda i: i.bv("A", "T") == i.vec(X=y * p.c22, Y=-y * p.c12)
        )(inst),
        "conformal: bv(B,T) = y1/4 (c21 X - c11 Y)": _conformal_only(
            lambda i: i.bv("B", "T") == i.vec(X=y * p.c21, Y=-y * p.c11)
        )(inst),
        "conformal: bv(C,T) = y1/4 (-b21 X + b11 Y)": _conformal_only(
            lambda i: i.bv("C", "T") == i.vec(X=-y * p.b21, Y=y * p.b11)
        )(inst),
        "conformal: totally geodesic iff rho=b11=b21=c11=c21=y1*c12=y1*c22=0": _conformal_only(
            lambda i: i.report.totally_geodesic == tg
        )(inst),
    }


CHECKS = {
    "su2su2": checks_su2su2,
    "su2sl2": checks_su2sl2,
    "su2so2": checks_su2so2,
    "sl2so2": checks_sl2so2,
}


@dataclass
class CheckRow:
    family: str
    check: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def verify_family(family: str, seed: int = 0, draws: int = 100) -> list[CheckRow]:
    rows: dict[str, CheckRow] = {}
    for params in family_draws(family, seed, draws):
        inst = build_instance(family, params)
        for name, verdict in CHECKS[family](inst).items():
            row = rows.setdefault(name, CheckRow(family, name, 0, 0))
            if verdict is None:
                continue
            row.total += 1
            row.passed += bool(verdict)
    return list(rows.values())


def verify_families(seed: int = 0, draws: int = 100) -> list[CheckRow]:
    out = []
    for fam in FAMILIES:
        out.extend(verify_family(fam, seed, draws))
    return out


def format_table(rows: list[CheckRow], seed: int, draws: int) -> str:
    width = max(len(r.check) for r in rows)
    lines = [f"verify-families seed={seed} draws={draws}"]
    for r in rows:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{r.family:<7} {r.check:<{width}}  {r.passed:>4}/{r.total:<4} {status}")
    fams = {}
    for r in rows:
        fams[r.family] = fams.get(r.family, True) and r.ok
    for fam, ok in fams.items():
        lines.append(f"{fam:<7} {'overall':<{width}}  {'':>9} {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
