import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cubic_density.fforacle import (CubicForm, binary_cubic_solubility, build_field_tower,
                                    check_condition, classify_form, count_types, enumerate_counts,
                                    gaussian_binomial, generate_type_forms, monomial_index,
                                    padic_binary_cubic_sample)
from cubic_density.localdensity import rho_local, xi_table

GRID = [(1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (3, 2), (3, 3)]


def binary(p, a, b, c, d):
    """a x0^3 + b x0^2 x1 + c x0 x1^2 + d x1^3."""
    return CubicForm(1, p, (a % p, b % p, c % p, d % p))


def binary_roots(f):
    p = f.p
    a, b, c, d = f.coeffs
    pts = [(x, 1) for x in range(p)] + [(1, 0)]
    return [(x, y) for x, y in pts if (a * x ** 3 + b * x * x * y + c * x * y * y + d * y ** 3) % p == 0]


# -- field tower ---------------------------------------------------------------------------

def test_tower_p2():
    tower = build_field_tower(2)
    assert tower.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert tower.frobenius_order() == 3


@pytest.mark.parametrize("p", [3, 5, 7])
def test_tower_modulus_has_no_root(p):
    tower = build_field_tower(p)
    m = tower.modulus
    assert m[3] == 1
    assert all(sum(c * r ** k for k, c in enumerate(m)) % p for r in range(p))
    assert tower.frobenius_order() == 3


def test_tower_rejects_non_prime():
    with pytest.raises(ValueError):
        build_field_tower(4)


def test_frobenius_is_additive_and_multiplicative():
    tower = build_field_tower(3)
    for a, b in product(range(0, 27, 4), range(1, 27, 5)):
        assert tower.frobenius(tower.add(a, b)) == tower.add(tower.frobenius(a), tower.frobenius(b))
        assert tower.frobenius(tower.mul(a, b)) == tower.mul(tower.frobenius(a), tower.frobenius(b))


def test_monomial_index_length():
    for n in range(5):
        assert len(monomial_index(n)) == math.comb(n + 3, 3)


# -- generation and classification ------------------------------------------------------------

def test_type1_binary_p2_are_cubes():
    cubes = set()
    for a, b in product(range(2), repeat=2):
        if a or b:
            # (a x + b y)^3 over F_2
            cubes.add(binary(2, a, 3 * a * a * b, 3 * a * b * b, b))
    assert {f.coeffs for f in generate_type_forms(1, 2, 1)} == {f.coeffs for f in cubes}
    assert len(cubes) == 3


def test_type2_binary_p2_are_irreducible():
    irreducible = {coeffs for coeffs in product(range(2), repeat=4)
                   if any(coeffs) and not binary_roots(binary(2, *coeffs))}
    assert len(irreducible) == 2
    assert {f.coeffs for f in generate_type_forms(1, 2, 2)} == irreducible


def test_type3_empty_for_binary():
    assert generate_type_forms(1, 2, 3) == frozenset()


@pytest.mark.parametrize("n,p", GRID)
def test_type_sets_disjoint(n, p):
    sets = [generate_type_forms(n, p, i) for i in (1, 2, 3)]
    assert not (sets[0] & sets[1]) and not (sets[0] & sets[2]) and not (sets[1] & sets[2])


def test_classify_examples():
    split = CubicForm.from_dict(1, 2, {(0, 0, 1): 1, (0, 1, 1): 1})  # x0 x1 (x0 + x1)
    assert classify_form(split) == 0
    assert classify_form(binary(2, 1, 0, 1, 1)) == 2
    assert classify_form(binary(2, 1, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        classify_form(binary(2, 0, 0, 0, 0))


def invertible_matrices(n, p):
    size = n + 1
    return st.lists(st.lists(st.integers(0, p - 1), min_size=size, max_size=size),
                    min_size=size, max_size=size).filter(
        lambda m: _det_mod(m, p) != 0)


def _det_mod(m, p):
    m = [list(r) for r in m]
    det, n = 1, len(m)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for r in range(c + 1, n):
            f = m[r][c] * inv % p
            m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return det % p


@given(st.sampled_from(sorted(generate_type_forms(2, 3, 3) | generate_type_forms(2, 3, 2)
                              | generate_type_forms(2, 3, 1), key=lambda f: f.coeffs)),
       invertible_matrices(2, 3), st.integers(1, 2))
@settings(max_examples=40, deadline=None)
def test_classify_invariant_under_substitution(f, m, c):
    g = f.substitute(m).scaled(c)
    assert classify_form(g) == classify_form(f)


@given(st.lists(st.integers(0, 2), min_size=10, max_size=10).filter(any), invertible_matrices(2, 3))
@settings(max_examples=40, deadline=None)
def test_classify_invariant_on_random_forms(coeffs, m):
    f = CubicForm(2, 3, tuple(coeffs))
    assert classify_form(f.substitute(m)) == classify_form(f)


# -- conditions ------------------------------------------------------------------------------

def test_condition_examples():
    f = binary(2, 1, 0, 0, 1)
    assert check_condition(f, 1)
    assert not check_condition(f, 2)
    assert check_condition(binary(2, 1, 0, 1, 1), 2)
    with pytest.raises(ValueError):
        check_condition(f, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_condition3_is_type3_on_ternary(p):
    for coeffs in product(range(p), repeat=10):
        if not any(coeffs):
            continue
        f = CubicForm(2, p, coeffs)
        assert check_condition(f, 3) == (classify_form(f) == 3)


# -- counts ------------------------------------------------------------------------------------

def test_count_examples():
    c = count_types(1, 2)
    assert (c.total, c.counts) == (15, {0: 10, 1: 3, 2: 2, 3: 0})
    c = count_types(2, 2)
    assert (c.total, c.counts[1], c.counts[2], c.counts[3]) == (1023, 7, 14, 8)
    c = count_types(0, 3)
    assert (c.total, c.counts) == (2, {0: 0, 1: 2, 2: 0, 3: 0})


def test_count_json_shape():
    data = count_types(1, 2, 1).to_json()
    assert data == {"n": 1, "q": 2, "condition": 1, "total": 8,
                    "counts": {"0": 4, "1": 2, "2": 2, "3": 0}}


@pytest.mark.parametrize("n,p,cond", [(1, 2, None), (1, 2, 1), (1, 2, 2), (1, 3, None), (1, 3, 1),
                                      (1, 3, 2), (2, 2, None), (2, 2, 1), (2, 2, 2), (2, 2, 3)])
def test_count_types_matches_full_enumeration(n, p, cond):
    assert count_types(n, p, cond) == enumerate_counts(n, p, cond)


def _grid_cases():
    for n, q in GRID:
        for cond in (None, 1, 2, 3):
            if cond is None or cond <= n + 1:
                yield n, q, cond


@pytest.mark.parametrize("n,q,cond", list(_grid_cases()))
def test_counts_match_closed_forms(n, q, cond):
    counts = count_types(n, q, cond)
    expected = xi_table(n, cond).at(q)
    for i in range(4):
        assert Fraction(counts.counts[i], counts.total) == expected[i]


@pytest.mark.parametrize("n,q", GRID)
def test_grassmannian_identity(n, q):
    for i in (1, 2, 3):
        if i > n + 1:
            continue
        base = count_types(i - 1, q).counts[i]
        assert count_types(n, q).counts[i] == gaussian_binomial(n + 1, i, q) * base


def test_grassmannian_example():
    assert count_types(2, 2).counts[1] == 7 * count_types(0, 2).counts[1] == 7


def test_count_rejects_large_condition():
    with pytest.raises(ValueError):
        count_types(1, 2, 3)


# -- p-adic sampler ----------------------------------------------------------------------------

def test_cube_is_soluble_immediately():
    assert binary_cubic_solubility((1, 0, 0, 0), 2, 40) == "soluble"


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducible_reduction_is_insoluble(p):
    f = min(generate_type_forms(1, p, 2), key=lambda f: f.coeffs)
    a, b, c, d = f.coeffs
    # lift with unit coefficients plus p-multiples
    assert binary_cubic_solubility((a + p, b + 2 * p, c, d + p * p), p, 40) == "insoluble"


def test_sampler_deterministic():
    a = padic_binary_cubic_sample(3, 500, 20, seed=7)
    b = padic_binary_cubic_sample(3, 500, 20, seed=7)
    assert a == b
    assert a.soluble + a.insoluble + a.undecided == a.samples


def test_sampler_close_to_exact():
    est = padic_binary_cubic_sample(2, 20000, 40, seed=11)
    target = float(rho_local(1)(2))
    sd = math.sqrt(target * (1 - target) / est.samples)
    assert abs(est.ratio - target) < 4 * sd
    assert est.undecided / est.samples < 0.01


def test_sampler_validation():
    with pytest.raises(ValueError):
        padic_binary_cubic_sample(4, 10, 40, 0)
    with pytest.raises(ValueError):
        padic_binary_cubic_sample(2, 10, 5, 0)
