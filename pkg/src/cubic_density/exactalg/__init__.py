"""Exact arithmetic: rationals, Q[t] and the rational function field Q(t)."""

from fractions import Fraction as Rat

from .poly import PolyQ, gcd_euclid_q, format_poly
from .ratfunc import PoleError, RatFunc, ratfunc_arith, ratfunc_eval, ratfunc_normalize

__all__ = [
    "Rat",
    "PolyQ",
    "RatFunc",
    "PoleError",
    "gcd_euclid_q",
    "format_poly",
    "ratfunc_arith",
    "ratfunc_eval",
    "ratfunc_normalize",
]
