"""The linear relations among lifting probabilities for cubic forms in n+1 variables.

Every unknown is a conditional probability that a p-adic cubic form has a
Q_p-point.  Each live unknown has exactly one defining row

    subject = constant + sum(coefficient * other unknown)

with coefficients in Q(t), t standing for p.  Unknowns that are zero for
structural reasons (the reduction leaves no room for a point) are recorded in
``forced_zeros`` and substituted before any row is stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from ..exactalg import RatFunc
from .xi import xi

KINDS = ("rho", "rho_cond", "sigma", "sigma_prime", "sigma_cond", "tau", "tau_prime", "theta")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}
_ARITY = {"rho": 0, "rho_cond": 1, "sigma": 1, "sigma_prime": 1, "sigma_cond": 2,
          "tau": 2, "tau_prime": 2, "theta": 3}

STAGES = ("theta", "middle", "final")
_STAGE_OF = {"theta": "theta", "sigma_cond": "middle", "tau": "middle", "tau_prime": "middle",
             "rho": "final", "rho_cond": "final", "sigma": "final", "sigma_prime": "final"}


class UnknownId(NamedTuple):
    """Name of a lifting probability.

    ``rho_cond(j)``: form satisfying condition j.  ``sigma(i)``: reduction of
    type i.  ``sigma_prime(i)``: type i, first rescaled form non-primitive.
    ``sigma_cond(i, k)``: type i, rescaled form satisfying condition k.
    ``tau(i, j)`` / ``tau_prime(i, j)`` / ``theta(i, j, k)``: the second and
    third rescaling stages.
    """

    kind: str
    idx: Tuple[int, ...] = ()

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.idx)

    @property
    def stage(self) -> str:
        return _STAGE_OF[self.kind]

    def __str__(self):
        if not self.idx:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.idx))})"

    @classmethod
    def parse(cls, text: str) -> "UnknownId":
        text = text.strip()
        if "(" not in text:
            return cls(text)
        kind, rest = text.split("(", 1)
        idx = tuple(int(x) for x in rest.rstrip(")").split(","))
        return cls(kind, idx)


def rho() -> UnknownId:
    return UnknownId("rho")


def rho_cond(j: int) -> UnknownId:
    return UnknownId("rho_cond", (j,))


def sigma(i: int) -> UnknownId:
    return UnknownId("sigma", (i,))


def sigma_prime(i: int) -> UnknownId:
    return UnknownId("sigma_prime", (i,))


def sigma_cond(i: int, k: int) -> UnknownId:
    """Type ``i`` with the rescaled form satisfying condition ``k``."""
    return UnknownId("sigma_cond", (i, k))


def tau(i: int, j: int) -> UnknownId:
    return UnknownId("tau", (i, j))


def tau_prime(i: int, j: int) -> UnknownId:
    return UnknownId("tau_prime", (i, j))


def theta(i: int, j: int, k: int) -> UnknownId:
    return UnknownId("theta", (i, j, k))


def all_unknowns() -> List[UnknownId]:
    """The 64 unknowns in canonical order."""
    out = []
    for kind in KINDS:
        for idx in product((1, 2, 3), repeat=_ARITY[kind]):
            out.append(UnknownId(kind, idx))
    return out


@dataclass(frozen=True)
class Row:
    subject: UnknownId
    constant: RatFunc
    coeffs: Dict[UnknownId, RatFunc]

    @property
    def stage(self) -> str:
        return self.subject.stage

    def residual(self, values: Dict[UnknownId, RatFunc]) -> RatFunc:
        """``subject - constant - sum(c * v)`` under ``values`` (zero when satisfied)."""
        acc = values[self.subject] - self.constant
        for u, c in self.coeffs.items():
            acc = acc - c * values[u]
        return acc


@dataclass
class LinearSystem:
    n: int
    rows: Dict[UnknownId, Row]
    forced_zeros: FrozenSet[UnknownId]
    pruned: FrozenSet[UnknownId] = field(default_factory=frozenset)

    def rows_in_stage(self, stage: str) -> List[Row]:
        return [r for u, r in sorted(self.rows.items(), key=lambda kv: kv[0].sort_key())
                if r.stage == stage]

    @property
    def live(self) -> List[UnknownId]:
        return sorted(self.rows, key=UnknownId.sort_key)

    def __iter__(self) -> Iterator[Row]:
        return iter(self.rows[u] for u in self.live)


class _Expr:
    """Affine combination ``constant + sum(c_u * u)`` used while building rows."""

    __slots__ = ("constant", "terms")

    def __init__(self, constant=None, terms=None):
        self.constant = constant if constant is not None else RatFunc.constant(0)
        self.terms: Dict[UnknownId, RatFunc] = dict(terms or {})

    @classmethod
    def var(cls, u: UnknownId) -> "_Expr":
        return cls(None, {u: RatFunc.constant(1)})

    def __add__(self, other: "_Expr") -> "_Expr":
        terms = dict(self.terms)
        for u, c in other.terms.items():
            terms[u] = terms[u] + c if u in terms else c
        return _Expr(self.constant + other.constant, terms)

    def scaled(self, c: RatFunc) -> "_Expr":
        if c.is_zero():
            return _Expr()
        return _Expr(self.constant * c, {u: v * c for u, v in self.terms.items()})

    @classmethod
    def const(cls, c: RatFunc) -> "_Expr":
        return cls(c)


def _one():
    return RatFunc.constant(1)


def _inv_tp(k: int) -> RatFunc:
    return RatFunc.t_power(-k)


def _mixture(m: int, link, condition=None) -> _Expr:
    """``xi_{m,0} + sum_j xi_{m,j} * link(j)``: type 0 lifts with certainty."""
    out = _Expr.const(xi(m, 0, condition))
    for j in (1, 2, 3):
        c = xi(m, j, condition)
        if not c.is_zero():
            out = out + _Expr.var(link(j)).scaled(c)
    return out


def _escape(exponent: int, rest: _Expr) -> _Expr:
    """``(1 - t^-e) + t^-e * rest``: a unit among the e free coefficients gives a Hensel lift."""
    w = _inv_tp(exponent)
    return _Expr.const(_one() - w) + rest.scaled(w)


def _split_primitive(size: int, primitive_part: _Expr, tail: _Expr) -> _Expr:
    """``(1 - t^-s) * primitive_part + t^-s * tail`` over ``s`` fresh coefficients."""
    w = _inv_tp(size)
    return primitive_part.scaled(_one() - w) + tail.scaled(w)


def forced_zero_ids(n: int) -> FrozenSet[UnknownId]:
    """Unknowns vanishing because every point would have all coordinates divisible by p."""
    out = set()
    for i in (1, 2, 3):
        if i == n + 1:
            out.add(sigma(i))
    for i, j in product((1, 2, 3), repeat=2):
        if i + j >= n + 1:
            out.add(tau(i, j))
    for i, j, k in product((1, 2, 3), repeat=3):
        if i + j + k >= n + 1:
            out.add(theta(i, j, k))
    return frozenset(out)


def _defining_expr(n: int, u: UnknownId):
    """Right-hand side of the row for ``u``, or None when ``u`` has no relation."""
    kind, idx = u
    if kind == "rho":
        return _mixture(n, sigma)
    if kind == "rho_cond":
        (j,) = idx
        if j > n + 1:
            return None
        return _mixture(n, sigma, condition=j)
    if kind == "sigma":
        (i,) = idx
        if i >= n + 1:
            return None
        m = n - i
        return _split_primitive(comb(m + 3, 3),
                                _mixture(m, lambda j: tau(i, j)),
                                _Expr.var(sigma_prime(i)))
    if kind == "sigma_prime":
        (i,) = idx
        if i >= n + 1:
            return None
        m = n - i
        inner = _split_primitive(comb(m + 3, 3),
                                 _mixture(m, lambda j: sigma_cond(j, i)),
                                 _Expr.var(rho_cond(i)))
        return _escape(i * comb(m + 2, 2), inner)
    if kind == "sigma_cond":
        i, k = idx
        if i + k > n + 1:
            return None
        return _mixture(n - i, lambda j: tau(i, j), condition=k)
    if kind == "tau":
        i, j = idx
        if i + j >= n + 1:
            return None
        m = n - i - j
        inner = _split_primitive(comb(m + 3, 3),
                                 _mixture(m, lambda k: theta(i, j, k)),
                                 _Expr.var(tau_prime(i, j)))
        return _escape(i * comb(m + 2, 2), inner)
    if kind == "tau_prime":
        i, j = idx
        if i + j >= n + 1:
            return None
        e = i * j * (n - i - j + 1) + j * comb(n - i - j + 2, 2)
        return _escape(e, _mixture(n - j, lambda k: sigma_cond(k, j), condition=i))
    if kind == "theta":
        i, j, k = idx
        if i + j + k >= n + 1:
            return None
        e = i * j * (n - i - j - k + 1) + j * comb(n - i - j - k + 2, 2)
        return _escape(e, _mixture(n - j - k, lambda l: theta(j, k, l), condition=i))
    raise ValueError(f"unknown kind {kind!r}")


def build_system(n: int) -> LinearSystem:
    if n < 1:
        raise ValueError(f"the relation system needs n >= 1, got {n}")
    forced = forced_zero_ids(n)
    rows: Dict[UnknownId, Row] = {}
    for u in all_unknowns():
        if u in forced:
            continue
        expr = _defining_expr(n, u)
        if expr is None:
            continue
        coeffs = {v: c for v, c in expr.terms.items() if v not in forced and not c.is_zero()}
        rows[u] = Row(u, expr.constant, coeffs)

    referenced = {v for r in rows.values() for v in r.coeffs}
    dangling = referenced - set(rows)
    if dangling:
        raise AssertionError(f"n={n}: rows reference unknowns without a relation: "
                             f"{sorted(map(str, dangling))}")
    pruned = frozenset(u for u in all_unknowns() if u not in rows and u not in forced)
    return LinearSystem(n, rows, forced | pruned, pruned)
