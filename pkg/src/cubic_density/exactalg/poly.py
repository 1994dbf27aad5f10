"""Univariate polynomials with rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from . import zpoly

Rat = Fraction
Number = Union[int, Fraction]


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(int(x))


class PolyQ:
    """Dense polynomial in ``t`` over Q.

    Stored as an integer coefficient tuple and a positive common denominator
    with no common factor, so ``PolyQ([1, 2]) == 1 + 2t``.  ``coefficients``
    gives the ascending list of exact rationals; the zero polynomial has an
    empty list.
    """

    __slots__ = ("_z", "_d")

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [_as_rat(c) for c in coefficients]
        d = 1
        for c in coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        self._set(zpoly.strip([c.numerator * (d // c.denominator) for c in coeffs]), d)

    def _set(self, z: zpoly.ZPoly, d: int) -> None:
        if not z:
            self._z, self._d = zpoly.ZERO, 1
            return
        g = math.gcd(zpoly.content(z), d)
        if g > 1:
            z = zpoly.exact_div_scalar(z, g)
            d //= g
        self._z, self._d = z, d

    @classmethod
    def from_zpoly(cls, z: zpoly.ZPoly, d: int = 1) -> "PolyQ":
        obj = cls.__new__(cls)
        obj._set(z, d)
        return obj

    @classmethod
    def x(cls) -> "PolyQ":
        return cls.from_zpoly((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "PolyQ":
        c = _as_rat(c)
        return cls.from_zpoly(zpoly.monomial(k, c.numerator), c.denominator)

    @classmethod
    def constant(cls, c: Number) -> "PolyQ":
        return cls.monomial(0, c)

    # -- accessors -------------------------------------------------------
    @property
    def coefficients(self) -> List[Fraction]:
        return [Fraction(c, self._d) for c in self._z]

    @property
    def integer_part(self) -> Tuple[zpoly.ZPoly, int]:
        """``(z, d)`` with ``self == z / d``."""
        return self._z, self._d

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._z) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._z:
            return Fraction(0)
        return Fraction(self._z[-1], self._d)

    def is_zero(self) -> bool:
        return not self._z

    def is_integral(self) -> bool:
        return self._d == 1

    def __bool__(self) -> bool:
        return bool(self._z)

    def __len__(self) -> int:
        return len(self._z)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._z):
            return Fraction(self._z[k], self._d)
        return Fraction(0)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._d * other._d // math.gcd(self._d, other._d)
        z = zpoly.add(zpoly.scale(self._z, d // self._d), zpoly.scale(other._z, d // other._d))
        return PolyQ.from_zpoly(z, d)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ.from_zpoly(zpoly.neg(self._z), self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PolyQ.from_zpoly(zpoly.mul(self._z, other._z), self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        return PolyQ.from_zpoly(zpoly.power(self._z, e), self._d ** e)

    def __truediv__(self, c):
        c = _as_rat(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return PolyQ.from_zpoly(zpoly.scale(self._z, c.denominator), self._d * c.numerator) \
            if c > 0 else PolyQ.from_zpoly(zpoly.scale(self._z, -c.denominator), -self._d * c.numerator)

    def divmod(self, other: "PolyQ") -> Tuple["PolyQ", "PolyQ"]:
        """Euclidean division over Q."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self.coefficients
        b = other.coefficients
        lb = b[-1]
        q = [Fraction(0)] * max(0, len(rem) - len(b) + 1)
        for k in range(len(rem) - len(b), -1, -1):
            c = rem[k + len(b) - 1] / lb
            q[k] = c
            if c:
                for j, y in enumerate(b):
                    rem[k + j] -= c * y
        return PolyQ(q), PolyQ(rem[:len(b) - 1])

    def monic(self) -> "PolyQ":
        if not self:
            return self
        return self / self.leading_coefficient

    def derivative(self) -> "PolyQ":
        return PolyQ.from_zpoly(zpoly.derivative(self._z), self._d)

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        x = _as_rat(x)
        if x.denominator == 1:
            return Fraction(zpoly.evaluate(self._z, x.numerator), self._d)
        deg = max(self.degree, 0)
        v = zpoly.evaluate_homogeneous(self._z, x.numerator, x.denominator, deg)
        return Fraction(v, self._d * x.denominator ** deg)

    # -- comparison / hashing ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyQ.constant(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self._z == other._z and self._d == other._d

    def __hash__(self):
        return hash((self._z, self._d))

    def __repr__(self):
        return f"PolyQ({self.to_json()!r})"

    def __str__(self):
        return format_poly(self.coefficients)

    # -- serialization -------------------------------------------------------
    def to_json(self) -> list:
        """Ascending coefficients: ints where integral, ``"num/den"`` strings otherwise."""
        out = []
        for c in self.coefficients:
            out.append(c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
        return out

    @classmethod
    def from_json(cls, data: Sequence) -> "PolyQ":
        return cls(_as_rat(c) for c in data)


def format_poly(coeffs: Sequence[Fraction], var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mon = var if k == 1 else f"{var}^{k}"
            body = mon if a == 1 else f"{a}*{mon}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def gcd_euclid_q(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd over Q by the plain Euclidean algorithm.

    Slow reference implementation; :mod:`zpoly` provides the fast route.
    """
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()
