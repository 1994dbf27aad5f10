"""Staged exact elimination of the relation system over Q(t)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional

from ..exactalg import RatFunc
from .system import STAGES, LinearSystem, UnknownId, build_system, rho

_ONE = RatFunc.constant(1)
_ZERO = RatFunc.constant(0)

# beyond this many variables every lifting probability is 1
MAX_NONTRIVIAL_N = 9


class SingularSystemError(ArithmeticError):
    pass


@dataclass
class ProbabilityTable:
    n: int
    solution: Dict[UnknownId, RatFunc]

    def __getitem__(self, u: UnknownId) -> RatFunc:
        return self.solution[u]

    @property
    def rho(self) -> RatFunc:
        return self.solution[rho()]

    def at(self, p: int) -> Dict[UnknownId, Fraction]:
        return {u: v(p) for u, v in self.solution.items()}

    def check_bounds(self, primes: Iterable[int]) -> List[str]:
        """Entries leaving [0, 1] at any of ``primes``, described as strings."""
        bad = []
        for p in primes:
            for u, v in self.solution.items():
                x = v(p)
                if not 0 <= x <= 1:
                    bad.append(f"{u} at p={p} is {x}")
        return bad


class _Equation:
    """``sum(coeffs[u] * u) = rhs``."""

    __slots__ = ("coeffs", "rhs", "subject")

    def __init__(self, subject, coeffs, rhs):
        self.subject = subject
        self.coeffs: Dict[UnknownId, RatFunc] = coeffs
        self.rhs: RatFunc = rhs


def _stage_equations(sys: LinearSystem, stage: str, known: Dict[UnknownId, RatFunc]):
    eqs = []
    for row in sys.rows_in_stage(stage):
        coeffs = {row.subject: _ONE}
        rhs = row.constant
        for u, c in row.coeffs.items():
            if u in known:
                rhs = rhs + c * known[u]
            elif u == row.subject:
                coeffs[u] = coeffs[u] - c
            else:
                coeffs[u] = coeffs.get(u, _ZERO) - c
        coeffs = {u: c for u, c in coeffs.items() if not c.is_zero()}
        eqs.append(_Equation(row.subject, coeffs, rhs))
    return eqs


def _eliminate(eqs: List[_Equation]) -> Dict[UnknownId, RatFunc]:
    """Gauss-Jordan over Q(t).

    The pivot is the nonzero coefficient of least total degree among the
    unused equations; ties go to the smaller unknown, then the smaller
    equation subject.
    """
    unknowns = sorted({u for e in eqs for u in e.coeffs}, key=UnknownId.sort_key)
    if len(unknowns) != len(eqs):
        raise SingularSystemError(f"{len(eqs)} equations in {len(unknowns)} unknowns")
    pending = list(eqs)
    done: List[tuple] = []
    while pending:
        best = None
        for e in pending:
            for u, c in e.coeffs.items():
                key = (c.total_degree, u.sort_key(), e.subject.sort_key())
                if best is None or key < best[0]:
                    best = (key, e, u)
        if best is None:
            raise SingularSystemError("an equation reduced to 0 = c")
        _, piv, u = best
        pending.remove(piv)
        inv = piv.coeffs[u].inverse()
        piv.coeffs = {v: (_ONE if v == u else c * inv) for v, c in piv.coeffs.items()}
        piv.rhs = piv.rhs * inv
        for e in pending + [d for _, d in done]:
            f = e.coeffs.get(u)
            if f is None:
                continue
            for v, c in piv.coeffs.items():
                if v == u:
                    continue
                nc = e.coeffs.get(v, _ZERO) - f * c
                if nc.is_zero():
                    e.coeffs.pop(v, None)
                else:
                    e.coeffs[v] = nc
            del e.coeffs[u]
            e.rhs = e.rhs - f * piv.rhs
            if not e.coeffs:
                raise SingularSystemError(f"equation for {e.subject} became dependent")
        done.append((u, piv))
    return {u: e.rhs for u, e in done}


def solve_staged(sys: LinearSystem) -> ProbabilityTable:
    known: Dict[UnknownId, RatFunc] = {u: _ZERO for u in sys.forced_zeros}
    for stage in STAGES:
        eqs = _stage_equations(sys, stage, known)
        if eqs:
            known.update(_eliminate(eqs))
    solution = {u: known[u] for u in sys.live}
    return ProbabilityTable(sys.n, solution)


@lru_cache(maxsize=None)
def solve(n: int) -> ProbabilityTable:
    return solve_staged(build_system(n))


def rho_local(n: int) -> RatFunc:
    """Probability that a random cubic form in n + 1 variables over Z_p is isotropic."""
    if n <= 0:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_NONTRIVIAL_N:
        return _ONE
    return solve(n).rho


def one_minus_rho(n: int) -> RatFunc:
    return _ONE - rho_local(n)


def residuals(sys: LinearSystem, table: ProbabilityTable) -> Dict[UnknownId, RatFunc]:
    """Nonzero row residuals after substituting ``table`` (empty when exact)."""
    values = dict(table.solution)
    for u in sys.forced_zeros:
        values[u] = _ZERO
    out = {}
    for row in sys:
        r = row.residual(values)
        if not r.is_zero():
            out[row.subject] = r
    return out


def stage_sizes(sys: LinearSystem) -> Dict[str, int]:
    return {s: len(sys.rows_in_stage(s)) for s in STAGES}


def lookup(table: ProbabilityTable, name: str) -> Optional[RatFunc]:
    return table.solution.get(UnknownId.parse(name))
