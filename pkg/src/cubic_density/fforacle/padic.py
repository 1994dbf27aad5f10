"""Monte Carlo estimate of the chance that a binary cubic over Z_p has a zero in P^1(Q_p)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

SOLUBLE, INSOLUBLE, UNDECIDED = "soluble", "insoluble", "undecided"


@dataclass(frozen=True)
class SolubilityEstimate:
    soluble: int
    insoluble: int
    undecided: int
    samples: int
    p: int
    precision: int

    @property
    def ratio(self) -> float:
        return self.soluble / self.samples

    def to_json(self) -> dict:
        return {"p": self.p, "samples": self.samples, "precision": self.precision,
                "soluble": self.soluble, "insoluble": self.insoluble, "undecided": self.undecided}


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _taylor_shift(g: List[int], r: int, p: int) -> List[int]:
    """Coefficients of ``g(r + p*x)``."""
    out = list(g)
    n = len(out)
    # Horner-style shift by r, then scale x -> p*x
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            out[k] += r * out[k + 1]
    return [c * p ** k for k, c in enumerate(out)]


def _eval(g: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(g):
        acc = acc * x + c
    return acc


def _roots_in_zp(g: List[int], p: int, budget: int, residues: Optional[Sequence[int]] = None) -> str:
    """Decide whether the integer polynomial ``g`` has a root in Z_p.

    ``budget`` is the number of p-adic digits still trusted: each division
    of the polynomial by its p-content spends that many digits.
    """
    if not any(g):
        return SOLUBLE
    v = min(_valuation(c, p) for c in g if c)
    if v >= budget:
        return UNDECIDED
    if v:
        g = [c // p ** v for c in g]
        budget -= v
    undecided = False
    for r in (range(p) if residues is None else residues):
        if _eval(g, r) == 0:
            return SOLUBLE
        if _eval(g, r) % p:
            continue
        deriv = sum(k * c * r ** (k - 1) for k, c in enumerate(g) if k)
        if deriv % p:
            return SOLUBLE  # simple root mod p lifts
        res = _roots_in_zp(_taylor_shift(g, r, p), p, budget, None)
        if res == SOLUBLE:
            return SOLUBLE
        undecided = undecided or res == UNDECIDED
    return UNDECIDED if undecided else INSOLUBLE


def binary_cubic_solubility(coeffs: Sequence[int], p: int, precision: int) -> str:
    """``coeffs = (a, b, c, d)`` for ``a x^3 + b x^2 y + c x y^2 + d y^3``.

    Points of P^1(Q_p) are ``[x : 1]`` with x in Z_p, or ``[1 : y]`` with y in pZ_p.
    """
    a, b, c, d = coeffs
    first = _roots_in_zp([d, c, b, a], p, precision)
    if first == SOLUBLE:
        return SOLUBLE
    second = _roots_in_zp([a, b, c, d], p, precision, residues=(0,))
    if second == SOLUBLE:
        return SOLUBLE
    if UNDECIDED in (first, second):
        return UNDECIDED
    return INSOLUBLE


def padic_binary_cubic_sample(p: int, samples: int, precision: int = 40, seed: int = 0) -> SolubilityEstimate:
    if p < 2 or any(p % f == 0 for f in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if samples < 1:
        raise ValueError("samples must be positive")
    if precision < 10:
        raise ValueError(f"precision must be >= 10, got {precision}")
    rng = random.Random(seed)
    modulus = p ** precision
    tally = {SOLUBLE: 0, INSOLUBLE: 0, UNDECIDED: 0}
    for _ in range(samples):
        coeffs = [rng.randrange(modulus) for _ in range(4)]
        tally[binary_cubic_solubility(coeffs, p, precision)] += 1
    return SolubilityEstimate(tally[SOLUBLE], tally[INSOLUBLE], tally[UNDECIDED], samples, p, precision)
