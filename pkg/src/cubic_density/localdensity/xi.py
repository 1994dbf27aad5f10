"""Closed-form factorization-type probabilities over F_q, as functions of t = q.

``xi_table(n)`` gives the chance that a nonzero cubic form in ``n + 1``
variables has factorization type 0..3; ``xi_table(n, j)`` the same chance
among forms satisfying the point (1), line (2) or plane (3) condition.  Type
0 is always defined as the complement of types 1..3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Optional

from ..exactalg import PolyQ, RatFunc

_T = PolyQ.x()
_ONE = RatFunc.constant(1)
_ZERO = RatFunc.constant(0)


def _tp(k: int) -> RatFunc:
    return RatFunc.t_power(k)


def _poly(*terms) -> PolyQ:
    """Sum of ``c * t**k`` for the given ``(c, k)`` pairs with k >= 0."""
    out = PolyQ()
    for c, k in terms:
        out = out + PolyQ.monomial(k, c)
    return out


@dataclass(frozen=True)
class XiTable:
    n: int
    condition: Optional[int]
    values: Dict[int, RatFunc]

    def __getitem__(self, i: int) -> RatFunc:
        return self.values[i]

    def at(self, q: int) -> Dict[int, "Fraction"]:  # noqa: F821
        return {i: v(q) for i, v in self.values.items()}


def _complete(n: int, condition: Optional[int], v1, v2, v3) -> XiTable:
    return XiTable(n, condition, {0: _ONE - v1 - v2 - v3, 1: v1, 2: v2, 3: v3})


@lru_cache(maxsize=None)
def xi_table(n: int, condition: Optional[int] = None) -> XiTable:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if condition is not None:
        if condition not in (1, 2, 3):
            raise ValueError(f"condition must be 1, 2 or 3, got {condition}")
        if condition > n + 1:
            raise ValueError(f"condition ({condition}) needs at least {condition} variables; n = {n}")
    if n == 0:
        # a x_0^3: type 1 with or without the point condition
        return XiTable(0, condition, {0: _ZERO, 1: _ONE, 2: _ZERO, 3: _ZERO})

    c = comb(n + 3, 3)
    if condition is None:
        total = _poly((1, c), (-1, 0))
        v1 = RatFunc(_poly((1, n + 1), (-1, 0)), total)
        v2 = RatFunc(_poly((1, 2 * n + 2), (-1, n + 2), (-1, n + 1), (1, 1)), 3 * total)
        num3 = _poly((1, 3 * n + 3), (-1, 2 * n + 3), (-1, 2 * n + 4), (-1, 2 * n + 2),
                     (1, n + 4), (1, n + 2), (1, n + 3), (-1, 3))
        v3 = RatFunc(num3, 3 * (_T ** 2 + _T + 1) * total)
        return _complete(n, None, v1, v2, v3)

    if condition == 1:
        v1 = _tp(-(c - n - 1))
        v2 = RatFunc((_T + 1) * _poly((1, n), (-1, 0))) * _tp(-(c - n - 1)) / 3
        v3 = RatFunc(_poly((1, 2 * n - 1), (-1, n - 1), (-1, n), (1, 0))) * _tp(-(c - n - 2)) / 3
        return _complete(n, 1, v1, v2, v3)
    if condition == 2:
        v2 = _tp(-(c - 2 * n - 2))
        v3 = RatFunc(_poly((1, n - 1), (-1, 0))) * _tp(-(c - 2 * n - 2))
        return _complete(n, 2, _ZERO, v2, v3)
    v3 = _tp(-(c - 3 * n - 4))
    return _complete(n, 3, _ZERO, _ZERO, v3)


def xi(m: int, i: int, condition: Optional[int] = None) -> RatFunc:
    """Single entry with the degenerate-index convention of the relation builder.

    Out-of-range arguments (``m < 0``, a type exceeding ``m + 1`` variables,
    a condition needing more than ``m + 1`` variables) give 0.
    """
    if m < 0 or i > m + 1:
        return _ZERO
    if condition is not None and condition > m + 1:
        return _ZERO
    return xi_table(m, condition).values[i]
