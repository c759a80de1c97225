"""Left-invariant foliations on metric Lie algebras, computed exactly over Q."""

from liefol.ratlin import Rational, fmt_rat, parse_rat, rref, solve_linear
from liefol.liecore import MetricLieAlgebra, Splitting, bracket, jacobi_check, jacobi_defect, is_subalgebra
from liefol.geometry import classify, koszul, mean_curvature, second_forms

__all__ = [
    "Rational",
    "fmt_rat",
    "parse_rat",
    "rref",
    "solve_linear",
    "MetricLieAlgebra",
    "Splitting",
    "bracket",
    "jacobi_check",
    "jacobi_defect",
    "is_subalgebra",
    "classify",
    "koszul",
    "mean_curvature",
    "second_forms",
]
