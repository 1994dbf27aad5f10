"""The rational function field Q(t) with a canonical normal form.

A :class:`RatFunc` is ``num/den`` where ``num`` and ``den`` are integer
polynomials, ``gcd(num, den) = 1`` in Q[t], the integer content of the pair is
1 and ``den`` has a positive leading coefficient.  Two value-equal functions
therefore have identical fields, and ``==`` is a structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from . import zpoly
from .poly import PolyQ, Number, _as_rat


class PoleError(ZeroDivisionError):
    """Evaluation at a zero of the denominator."""


def _split(p: PolyQ):
    z, d = p.integer_part
    return z, d


class RatFunc:
    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Union[PolyQ, Number] = 0, den: Union[PolyQ, Number] = 1):
        if not isinstance(num, PolyQ):
            num = PolyQ.constant(num)
        if not isinstance(den, PolyQ):
            den = PolyQ.constant(den)
        if not den:
            raise ZeroDivisionError("division by zero in Q(t)")
        nz, nd = _split(num)
        dz, dd = _split(den)
        # num/den = (nz*dd) / (dz*nd)
        self._init_reduce(zpoly.scale(nz, dd), zpoly.scale(dz, nd))

    def _init_reduce(self, n: zpoly.ZPoly, d: zpoly.ZPoly) -> None:
        if not n:
            self._num, self._den = zpoly.ZERO, zpoly.ONE
        else:
            _, n, d = zpoly.gcd_with_cofactors(n, d)
            if d[-1] < 0:
                n, d = zpoly.neg(n), zpoly.neg(d)
            self._num, self._den = n, d
        self._hash = None

    @classmethod
    def _raw(cls, n: zpoly.ZPoly, d: zpoly.ZPoly) -> "RatFunc":
        """Build from an already normalised pair."""
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = n, d, None
        return obj

    @classmethod
    def _reduced(cls, n: zpoly.ZPoly, d: zpoly.ZPoly) -> "RatFunc":
        if not d:
            raise ZeroDivisionError("division by zero in Q(t)")
        obj = cls.__new__(cls)
        obj._init_reduce(n, d)
        return obj

    @classmethod
    def t(cls) -> "RatFunc":
        return cls._raw((0, 1), zpoly.ONE)

    @classmethod
    def t_power(cls, k: int) -> "RatFunc":
        """``t**k`` for any integer ``k``."""
        if k >= 0:
            return cls._raw(zpoly.monomial(k), zpoly.ONE)
        return cls._raw(zpoly.ONE, zpoly.monomial(-k))

    @classmethod
    def constant(cls, c: Number) -> "RatFunc":
        c = _as_rat(c)
        if not c:
            return cls._raw(zpoly.ZERO, zpoly.ONE)
        return cls._raw((c.numerator,), (c.denominator,))

    # -- accessors -------------------------------------------------------
    @property
    def num(self) -> PolyQ:
        return PolyQ.from_zpoly(self._num)

    @property
    def den(self) -> PolyQ:
        return PolyQ.from_zpoly(self._den)

    @property
    def numerator_coeffs(self) -> zpoly.ZPoly:
        return self._num

    @property
    def denominator_coeffs(self) -> zpoly.ZPoly:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._num == zpoly.ONE and self._den == zpoly.ONE

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def __bool__(self) -> bool:
        return bool(self._num)

    @property
    def total_degree(self) -> int:
        """deg(num) + deg(den); the pivot-size measure used by the solver."""
        return max(len(self._num) - 1, 0) + len(self._den) - 1

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        if isinstance(other, PolyQ):
            return RatFunc(other)
        return NotImplemented

    def _addsub(self, other: "RatFunc", sign: int) -> "RatFunc":
        a, b = self._num, self._den
        c, d = other._num, other._den
        if sign < 0:
            c = zpoly.neg(c)
        if not a:
            return RatFunc._raw(c, d)
        if not c:
            return self
        if b == d:
            return RatFunc._reduced(zpoly.add(a, c), b)
        # Henrici: only the shared part of the denominators can cancel
        g, b1, d1 = zpoly.gcd_with_cofactors(b, d)
        n = zpoly.add(zpoly.mul(a, d1), zpoly.mul(c, b1))
        if not n:
            return RatFunc._raw(zpoly.ZERO, zpoly.ONE)
        if g == zpoly.ONE:
            den = zpoly.mul(b, d1)
            return RatFunc._raw(*_fix_sign(n, den))
        h, n2, g2 = zpoly.gcd_with_cofactors(n, g)
        return RatFunc._raw(*_fix_sign(n2, zpoly.mul(zpoly.mul(b1, d1), g2)))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._addsub(self, -1)

    def __neg__(self):
        return RatFunc._raw(zpoly.neg(self._num), self._den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, self._den
        c, d = other._num, other._den
        if not a or not c:
            return RatFunc._raw(zpoly.ZERO, zpoly.ONE)
        # cross-cancel, each pair is already coprime
        _, a1, d1 = zpoly.gcd_with_cofactors(a, d)
        _, c1, b1 = zpoly.gcd_with_cofactors(c, b)
        return RatFunc._raw(*_fix_sign(zpoly.mul(a1, c1), zpoly.mul(b1, d1)))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self._num:
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc._raw(*_fix_sign(self._den, self._num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(zpoly.power(self._num, e), zpoly.power(self._den, e)) \
            if self._num else (RatFunc.constant(1) if e == 0 else self)

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        """Exact value at the rational point ``x``."""
        x = _as_rat(x)
        if x.denominator == 1:
            n = zpoly.evaluate(self._num, x.numerator)
            d = zpoly.evaluate(self._den, x.numerator)
        else:
            deg = max(len(self._num), len(self._den)) - 1
            n = zpoly.evaluate_homogeneous(self._num, x.numerator, x.denominator, deg)
            d = zpoly.evaluate_homogeneous(self._den, x.numerator, x.denominator, deg)
        if not d:
            raise PoleError(f"pole at t = {x}")
        return Fraction(n, d)

    # -- comparison / hashing ------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self.num}, {self.den})"

    def __str__(self):
        if self._den == zpoly.ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict:
        return {"num": list(self._num), "den": list(self._den)}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(PolyQ.from_json(data["num"]), PolyQ.from_json(data["den"]))


def _fix_sign(n, d):
    if d[-1] < 0:
        return zpoly.neg(n), zpoly.neg(d)
    return n, d


def ratfunc_normalize(num: PolyQ, den: PolyQ) -> RatFunc:
    return RatFunc(num, den)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Field operation ``op`` in {"add", "sub", "mul", "div"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_eval(f: RatFunc, x: Number) -> Fraction:
    return f.evaluate(x)
