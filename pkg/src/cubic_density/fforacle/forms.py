"""Cubic forms over F_p: generation of factorization types, classification, counts."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .field import build_field_tower

# candidate linear forms over F_{p^3} allowed in one enumeration
MAX_CANDIDATES = 3 ** 12 + 1


@dataclass(frozen=True)
class MonomialIndex:
    n: int
    monomials: Tuple[Tuple[int, int, int], ...]

    def __len__(self):
        return len(self.monomials)

    def position(self, mono: Tuple[int, int, int]) -> int:
        return _positions(self.n)[tuple(sorted(mono))]


@lru_cache(maxsize=None)
def monomial_index(n: int) -> MonomialIndex:
    monos = tuple((i, j, k) for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1))
    return MonomialIndex(n, monos)


@lru_cache(maxsize=None)
def _positions(n: int) -> Dict[Tuple[int, int, int], int]:
    return {m: k for k, m in enumerate(monomial_index(n).monomials)}


@lru_cache(maxsize=None)
def _assignments(n: int):
    """For each monomial, the distinct orderings (a, b, c) of its variables."""
    return tuple(tuple(sorted(set(permutations(m)))) for m in monomial_index(n).monomials)


@dataclass(frozen=True)
class CubicForm:
    n: int
    p: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != comb(self.n + 3, 3):
            raise ValueError(f"expected {comb(self.n + 3, 3)} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_dict(cls, n: int, p: int, terms: Dict[Tuple[int, int, int], int]) -> "CubicForm":
        coeffs = [0] * comb(n + 3, 3)
        pos = _positions(n)
        for mono, c in terms.items():
            coeffs[pos[tuple(sorted(mono))]] = (coeffs[pos[tuple(sorted(mono))]] + c) % p
        return cls(n, p, tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, point: Sequence[int]) -> int:
        p = self.p
        acc = 0
        for (i, j, k), c in zip(monomial_index(self.n).monomials, self.coeffs):
            if c:
                acc += c * point[i] * point[j] * point[k]
        return acc % p

    def scaled(self, c: int) -> "CubicForm":
        return CubicForm(self.n, self.p, tuple(x * c % self.p for x in self.coeffs))

    def canonical(self) -> "CubicForm":
        """Scalar multiple whose first nonzero coefficient is 1."""
        lead = next(c for c in self.coeffs if c)
        return self.scaled(pow(lead, -1, self.p))

    def restrict(self, k: int) -> "CubicForm":
        """Set ``x_k, ..., x_n`` to zero, leaving a form in ``k`` variables."""
        keep = {m: c for m, c in zip(monomial_index(self.n).monomials, self.coeffs) if m[2] < k}
        return CubicForm.from_dict(k - 1, self.p, keep)

    def substitute(self, matrix: Sequence[Sequence[int]]) -> "CubicForm":
        """The form ``x -> f(M x)``, with ``x_i`` replaced by ``sum_j M[i][j] x_j``."""
        p, n = self.p, self.n
        out: Dict[Tuple[int, int, int], int] = {}
        for (i, j, k), c in zip(monomial_index(n).monomials, self.coeffs):
            if not c:
                continue
            for a, b, d in product(range(n + 1), repeat=3):
                w = c * matrix[i][a] * matrix[j][b] * matrix[k][d] % p
                if w:
                    key = tuple(sorted((a, b, d)))
                    out[key] = (out.get(key, 0) + w) % p
        return CubicForm.from_dict(n, p, out)


def _rank_mod_p(rows: List[List[int]], p: int) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _norm_form(ell: Sequence[int], tower, n: int) -> Tuple[int, ...]:
    """Coefficients of ``ell * ell^sigma * ell^(sigma^2)`` in MonomialIndex order."""
    frob = tower.frobenius
    l1 = ell
    l2 = [frob(a) for a in l1]
    l3 = [frob(a) for a in l2]
    mul, add = tower.mul, tower.add
    out = []
    for orders in _assignments(n):
        acc = 0
        for a, b, c in orders:
            if l1[a] and l2[b] and l3[c]:
                acc = add(acc, mul(mul(l1[a], l2[b]), l3[c]))
        if acc >= tower.p:
            raise AssertionError("norm form has a coefficient outside F_p")
        out.append(acc)
    return tuple(out)


def _normalized_linear_forms(n: int, size: int):
    """Linear forms over F_{p^3} whose first nonzero coefficient is 1."""
    for lead in range(n + 1):
        for tail in product(range(size), repeat=n - lead):
            yield (0,) * lead + (1,) + tail


@lru_cache(maxsize=None)
def _canonical_type_forms(n: int, p: int) -> Dict[Tuple[int, ...], int]:
    """Canonical representative -> factorization type, for all types 1..3."""
    tower = build_field_tower(p)
    size = tower.size
    candidates = (size ** (n + 1) - 1) // (size - 1)
    if candidates > MAX_CANDIDATES:
        raise ValueError(f"{candidates} linear forms for n={n}, p={p} exceed the bound {MAX_CANDIDATES}")
    out: Dict[Tuple[int, ...], int] = {}
    for ell in _normalized_linear_forms(n, size):
        dim = _rank_mod_p([list(tower.decode(a)) for a in ell], p)
        form = CubicForm(n, p, _norm_form(ell, tower, n)).canonical()
        prev = out.setdefault(form.coeffs, dim)
        if prev != dim:
            raise AssertionError(f"form {form.coeffs} arises with span dimensions {prev} and {dim}")
    return out


def generate_type_forms(n: int, p: int, i: int) -> FrozenSet[CubicForm]:
    """Every nonzero cubic form over F_p of factorization type ``i`` (all scalar multiples)."""
    if i not in (1, 2, 3):
        raise ValueError(f"type must be 1, 2 or 3, got {i}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if i > n + 1:
        return frozenset()
    out = set()
    for coeffs, t in _canonical_type_forms(n, p).items():
        if t == i:
            base = CubicForm(n, p, coeffs)
            out.update(base.scaled(c) for c in range(1, p))
    return frozenset(out)


def classify_form(f: CubicForm) -> int:
    if f.is_zero():
        raise ValueError("the zero form has no factorization type")
    return _canonical_type_forms(f.n, f.p).get(f.canonical().coeffs, 0)


def projective_points(k: int, p: int):
    """Representatives of P^{k-1}(F_p): last nonzero coordinate 1."""
    for last in range(k):
        for head in product(range(p), repeat=last):
            yield head + (1,) + (0,) * (k - 1 - last)


def has_projective_zero(f: CubicForm) -> bool:
    return any(f(pt) == 0 for pt in projective_points(f.n + 1, f.p))


def check_condition(f: CubicForm, j: int) -> bool:
    """Condition (j): the restriction to the first j variables has no nontrivial zero."""
    if j not in (1, 2, 3):
        raise ValueError(f"condition must be 1, 2 or 3, got {j}")
    if j > f.n + 1:
        raise ValueError(f"condition {j} needs at least {j} variables, form has {f.n + 1}")
    if j == 1:
        return f.coeffs[0] != 0
    return not has_projective_zero(f.restrict(j))


@dataclass(frozen=True)
class TypeCounts:
    n: int
    q: int
    condition: Optional[int]
    total: int
    counts: Dict[int, int]

    def __post_init__(self):
        if sum(self.counts.values()) != self.total:
            raise AssertionError("type counts do not sum to the total")

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "condition": self.condition, "total": self.total,
                "counts": {str(i): self.counts[i] for i in range(4)}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


@lru_cache(maxsize=None)
def restricted_condition_count(j: int, p: int) -> int:
    """Nonzero forms in ``j`` variables without a zero in P^{j-1}(F_p)."""
    if j == 1:
        return p - 1
    size = comb(j + 2, 3)
    count = 0
    for coeffs in product(range(p), repeat=size):
        if any(coeffs) and not has_projective_zero(CubicForm(j - 1, p, coeffs)):
            count += 1
    return count


def condition_total(n: int, p: int, j: int) -> int:
    """Number of forms in n + 1 variables satisfying condition (j).

    Only the ``binom(j+2, 3)`` coefficients of the restriction are
    constrained; the rest are free.
    """
    return restricted_condition_count(j, p) * p ** (comb(n + 3, 3) - comb(j + 2, 3))


def count_types(n: int, p: int, condition: Optional[int] = None) -> TypeCounts:
    if condition is not None and condition > n + 1:
        raise ValueError(f"condition {condition} needs at least {condition} variables; n = {n}")
    counts = {}
    for i in (1, 2, 3):
        forms = generate_type_forms(n, p, i)
        if condition is not None:
            forms = [f for f in forms if check_condition(f, condition)]
        counts[i] = len(forms)
    if condition is None:
        total = p ** comb(n + 3, 3) - 1
    else:
        total = condition_total(n, p, condition)
    counts[0] = total - counts[1] - counts[2] - counts[3]
    return TypeCounts(n, p, condition, total, dict(sorted(counts.items())))


def enumerate_counts(n: int, p: int, condition: Optional[int] = None) -> TypeCounts:
    """Same as :func:`count_types` but by classifying every form; only for tiny sizes."""
    size = comb(n + 3, 3)
    if p ** size > 2 ** 20:
        raise ValueError(f"{p}^{size} forms are too many to enumerate")
    counts = {0: 0, 1: 0, 2: 0, 3: 0}
    total = 0
    for coeffs in product(range(p), repeat=size):
        if not any(coeffs):
            continue
        f = CubicForm(n, p, coeffs)
        if condition is not None and not check_condition(f, condition):
            continue
        total += 1
        counts[classify_form(f)] += 1
    return TypeCounts(n, p, condition, total, counts)


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^k."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
