"""Prime fields and their cubic extensions with integer-encoded elements.

An element ``a0 + a1*x + a2*x**2`` of F_{p^3} = F_p[x]/(m) is stored as the
integer ``a0 + a1*p + a2*p**2``; the elements of F_p are exactly the codes
below ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import List, Tuple

DEFAULT_PRIME_BOUND = 13
# small towers get full multiplication tables
_TABLE_LIMIT = 125


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _has_root(coeffs: Tuple[int, ...], p: int) -> bool:
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return True
    return False


def smallest_irreducible_cubic(p: int) -> Tuple[int, int, int, int]:
    """Ascending coefficients of the first monic cubic with no root in F_p.

    Candidates ``x^3 + c2 x^2 + c1 x + c0`` are scanned with ``(c2, c1, c0)``
    in lexicographic order.  A cubic without roots has no linear factor and
    is therefore irreducible.
    """
    for c2, c1, c0 in product(range(p), repeat=3):
        m = (c0, c1, c2, 1)
        if not _has_root(m, p):
            return m
    raise AssertionError(f"no irreducible cubic over F_{p}")  # pragma: no cover


@dataclass
class FieldTower:
    p: int
    modulus: Tuple[int, int, int, int]
    size: int = field(init=False)
    _mul: List[int] = field(init=False, repr=False, default=None)

    def __post_init__(self):
        self.size = self.p ** 3
        if _has_root(self.modulus, self.p):
            raise ValueError(f"{self.modulus} has a root mod {self.p}")
        if self.size <= _TABLE_LIMIT:
            s = self.size
            self._mul = [self._mul_slow(a, b) for a in range(s) for b in range(s)]
        self._frob = [self.power(a, self.p) for a in range(self.size)]

    # -- encoding ----------------------------------------------------------
    def encode(self, v) -> int:
        p = self.p
        return (v[0] % p) + (v[1] % p) * p + (v[2] % p) * p * p

    def decode(self, a: int) -> Tuple[int, int, int]:
        p = self.p
        return a % p, (a // p) % p, a // (p * p)

    def in_base(self, a: int) -> bool:
        return a < self.p

    # -- arithmetic --------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        return ((a % p + b % p) % p
                + ((a // p) % p + (b // p) % p) % p * p
                + ((a // (p * p)) + (b // (p * p))) % p * p * p)

    def neg(self, a: int) -> int:
        x0, x1, x2 = self.decode(a)
        return self.encode((-x0, -x1, -x2))

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.p
        x = self.decode(a)
        y = self.decode(b)
        prod = [0] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] += x[i] * y[j]
        m0, m1, m2, _ = self.modulus
        # x^3 = -(m2 x^2 + m1 x + m0)
        for k in (4, 3):
            c = prod[k] % p
            if c:
                prod[k] = 0
                prod[k - 1] -= c * m2
                prod[k - 2] -= c * m1
                prod[k - 3] -= c * m0
        return self.encode(prod[:3])

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a * self.size + b]
        return self._mul_slow(a, b)

    def power(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        """``a ** p``."""
        return self._frob[a]

    def norm(self, a: int) -> int:
        """``a * a^p * a^(p^2)``, an element of F_p."""
        b = self.frobenius(a)
        return self.mul(self.mul(a, b), self.frobenius(b))

    def frobenius_order(self) -> int:
        """Smallest k >= 1 with Frobenius^k = identity."""
        k, images = 1, list(self._frob)
        while any(images[a] != a for a in range(self.size)):
            images = [self._frob[x] for x in images]
            k += 1
        return k


_TOWERS = {}


def build_field_tower(p: int, bound: int = DEFAULT_PRIME_BOUND) -> FieldTower:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > bound:
        raise ValueError(f"p = {p} exceeds the configured bound {bound}")
    if p not in _TOWERS:
        _TOWERS[p] = FieldTower(p, smallest_irreducible_cubic(p))
    return _TOWERS[p]
