"""Bernoulli numbers and an Euler-Maclaurin upper bound for tails of the zeta Euler product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Dict

from .primes import primes_up_to

_BERNOULLI: Dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}


def _bernoulli_any(m: int) -> Fraction:
    # sum_{j=0}^{m} binom(m+1, j) B_j = 0
    for k in range(len(_BERNOULLI), m + 1):
        acc = sum(comb(k + 1, j) * _BERNOULLI[j] for j in range(k))
        _BERNOULLI[k] = -acc / (k + 1)
    return _BERNOULLI[m]


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number ``B_k`` for even ``k >= 2``."""
    if k < 2 or k % 2:
        raise ValueError(f"bernoulli(k) needs an even k >= 2, got {k}")
    return _bernoulli_any(k)


@dataclass(frozen=True)
class TailBoundParams:
    M: int = 1000
    I: int = 4

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if self.I < 2 or self.I % 2:
            raise ValueError(f"I must be an even integer >= 2, got {self.I}")


DEFAULT_PARAMS = TailBoundParams()

_SUM_CACHE: Dict[tuple, Fraction] = {}


def euler_maclaurin_upper(s: int, params: TailBoundParams = DEFAULT_PARAMS) -> Fraction:
    """Upper bound for zeta(s): partial sum to M, tail integral and Bernoulli corrections."""
    if s < 2:
        raise ValueError(f"s must be an integer >= 2, got {s}")
    key = (s, params.M, params.I)
    if key in _SUM_CACHE:
        return _SUM_CACHE[key]
    M, I = params.M, params.I
    L = lcm(*range(1, M + 1)) ** s
    partial = Fraction(sum(L // m ** s for m in range(1, M + 1)), L)
    total = partial + Fraction(1, (s - 1) * M ** (s - 1)) - Fraction(1, 2 * M ** s)
    fs = factorial(s - 1)
    for i in range(1, I + 1):
        total += bernoulli(2 * i) * factorial(s + 2 * i - 2) / (factorial(2 * i) * fs * M ** (s + 2 * i - 1))
    total += euler_maclaurin_remainder(s, params)
    _SUM_CACHE[key] = total
    return total


def euler_maclaurin_remainder(s: int, params: TailBoundParams = DEFAULT_PARAMS) -> Fraction:
    """Absolute size of the first omitted Bernoulli term."""
    M, I = params.M, params.I
    return abs(bernoulli(2 * I + 2) * factorial(s + 2 * I)
               / (factorial(2 * I + 2) * factorial(s - 1) * M ** (s + 2 * I + 1)))


def euler_factor_product(A, s: int) -> Fraction:
    """``prod_{p <= A} (1 - p^-s)``."""
    num = den = 1
    for p in primes_up_to(int(A)):
        ps = p ** s
        num *= ps - 1
        den *= ps
    return Fraction(num, den)


def zeta_tail_upper(A, s: int, params: TailBoundParams = DEFAULT_PARAMS) -> Fraction:
    """Exact rational upper bound for ``prod_{p > A} (1 - p^-s)^-1``."""
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    return euler_factor_product(A, s) * euler_maclaurin_upper(s, params)
