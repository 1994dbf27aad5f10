from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from cubic_density.exactalg import (PolyQ, PoleError, RatFunc, gcd_euclid_q, ratfunc_arith,
                                    ratfunc_eval, ratfunc_normalize)
from cubic_density.exactalg import zpoly

T = PolyQ.x()


def naive_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return zpoly.strip(out)


small_ints = st.integers(-50, 50)
zpolys = st.lists(small_ints, max_size=8).map(zpoly.strip)
big_zpolys = st.lists(st.integers(-2 ** 80, 2 ** 80), min_size=1, max_size=40).map(zpoly.strip)


nonzero_polyq = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                         min_size=1, max_size=5).map(PolyQ).filter(bool)
ratfuncs = st.builds(lambda a, b: RatFunc(a, b), nonzero_polyq | st.just(PolyQ()), nonzero_polyq)


# -- integer kernels ----------------------------------------------------------------

@given(big_zpolys, big_zpolys)
@settings(max_examples=60, deadline=None)
def test_kronecker_mul_matches_schoolbook(a, b):
    assert zpoly.mul(a, b) == naive_mul(a, b)


def test_large_product_uses_packing():
    a = tuple(range(-40, 41))
    b = tuple((-1) ** k * k ** 5 for k in range(60))
    assert zpoly.mul(a, b) == naive_mul(a, b)


@given(big_zpolys, big_zpolys)
@settings(max_examples=60, deadline=None)
def test_divides_recovers_quotient(a, b):
    assume(a and b)
    assert zpoly.divides(b, zpoly.mul(a, b)) == a


def test_divides_rejects_non_multiple():
    assert zpoly.divides((1, 1), (1, 0, 1)) is None
    assert zpoly.divides((2,), (1, 2)) is None
    assert zpoly.divides((1, 1), ()) == ()


@given(zpolys, zpolys, zpolys)
@settings(max_examples=80, deadline=None)
def test_gcd_agrees_with_euclid_over_q(a, b, c):
    assume(c)
    x, y = zpoly.mul(a, c), zpoly.mul(b, c)
    assume(x or y)
    h, fx, fy = zpoly.gcd_with_cofactors(x, y)
    assert zpoly.mul(h, fx) == x and zpoly.mul(h, fy) == y
    assert PolyQ.from_zpoly(h).monic() == gcd_euclid_q(PolyQ.from_zpoly(x), PolyQ.from_zpoly(y))


def test_gcd_of_high_degree_inputs():
    f = zpoly.power((1, -3, 7), 40)
    g = zpoly.mul(zpoly.power((1, -3, 7), 25), zpoly.power((5, 0, 0, 1), 30))
    h = zpoly.mul(f, (2, 9))
    assert zpoly.gcd(h, g) == zpoly.power((1, -3, 7), 25)


def test_gcd_zero_cases():
    assert zpoly.gcd_with_cofactors((), (-2, -4)) == ((2, 4), (), (-1,))
    assert zpoly.gcd_with_cofactors((3,), ()) == ((3,), (1,), ())


def test_pseudo_divmod_identity():
    a, b = (3, -1, 4, 1, -5, 9), (2, 0, 7)
    q, r = zpoly.pseudo_divmod(a, b)
    lc = b[-1] ** (len(a) - len(b) + 1)
    assert zpoly.add(zpoly.mul(q, b), r) == zpoly.scale(a, lc)
    assert len(r) < len(b)


# -- PolyQ ------------------------------------------------------------------------------

def test_polyq_basic():
    p = PolyQ([1, "1/2", 0])
    assert p.degree == 1
    assert p.coefficients == [1, Fraction(1, 2)]
    assert p(2) == 2
    assert PolyQ().degree == -1
    assert str((T - 1) ** 2) == "t^2 - 2*t + 1"
    assert PolyQ.from_json(p.to_json()) == p
    assert p.to_json() == [1, "1/2"]


def test_polyq_divmod():
    a = T ** 4 + 3 * T + 1
    b = 2 * T ** 2 - 1
    q, r = a.divmod(b)
    assert q * b + r == a and r.degree < b.degree


def test_gcd_euclid_q_monic():
    assert gcd_euclid_q(2 * (T - 1) * (T + 2), 6 * (T - 1) * (T + 3)) == T - 1


# -- RatFunc normal form ------------------------------------------------------------------

def test_normalize_examples():
    r = ratfunc_normalize(T ** 2 - 1, T - 1)
    assert r.num == T + 1 and r.den == PolyQ([1])
    r = ratfunc_normalize(PolyQ(), 7 * T)
    assert r.num == PolyQ() and r.den == PolyQ([1])
    r = ratfunc_normalize(2 * T + 2, PolyQ([-4]))
    assert r.numerator_coeffs == (-1, -1) and r.denominator_coeffs == (2,)


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero in Q\\(t\\)"):
        ratfunc_normalize(T, PolyQ())


def test_arith_examples():
    a = RatFunc(1, T - 1)
    b = RatFunc(1, T + 1)
    assert ratfunc_arith(a, b, "add") == RatFunc(2 * T, T ** 2 - 1)
    assert ratfunc_arith(a, RatFunc(0), "mul").is_zero()
    assert ratfunc_arith(RatFunc(T ** 3, T - 1), RatFunc(T, T - 1), "div") == RatFunc(T ** 2)
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(a, RatFunc(0), "div")
    with pytest.raises(ValueError):
        ratfunc_arith(a, b, "pow")


def test_eval_examples():
    t = RatFunc.t()
    rho1 = 1 - RatFunc((T ** 2 + 1) ** 2, 3 * (T ** 4 + T ** 3 + T ** 2 + T + 1))
    assert ratfunc_eval(rho1, 2) == Fraction(68, 93)
    assert ratfunc_eval(t / (t - 1), 0) == 0
    with pytest.raises(PoleError, match="t = 1"):
        ratfunc_eval(t / (t - 1), 1)


def test_rho1_numerator_closed_form():
    # 1 - g_1/h_1 written over the common denominator
    rho1 = 1 - RatFunc((T ** 2 + 1) ** 2, 3 * (T ** 4 + T ** 3 + T ** 2 + T + 1))
    assert rho1 == RatFunc(2 * T ** 4 + 3 * T ** 3 + T ** 2 + 3 * T + 2,
                           3 * (T ** 4 + T ** 3 + T ** 2 + T + 1))


def test_eval_at_fraction():
    f = RatFunc(T ** 2 + 1, T - 3)
    assert f(Fraction(1, 2)) == Fraction(5, 4) / Fraction(-5, 2)


def test_t_power_and_json():
    assert RatFunc.t_power(-3) * RatFunc.t_power(5) == RatFunc.t_power(2)
    f = RatFunc(T ** 2 - Fraction(1, 3), 5 * T + 2)
    assert RatFunc.from_json(f.to_json()) == f


@given(ratfuncs, ratfuncs)
@settings(max_examples=60, deadline=None)
def test_normal_form_unique(a, b):
    # value-equal inputs give identical fields
    scaled = RatFunc(a.num * b.den * 7, a.den * b.den * 7) if b else a
    assert scaled.numerator_coeffs == a.numerator_coeffs
    assert scaled.denominator_coeffs == a.denominator_coeffs
    assert a.den.leading_coefficient > 0
    assert zpoly.content(a.numerator_coeffs + a.denominator_coeffs) == 1 or a.is_zero()


@given(ratfuncs, ratfuncs, ratfuncs)
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RatFunc(0)
    if b:
        assert (a / b) * b == a


@given(ratfuncs, ratfuncs, st.fractions(min_value=-10, max_value=10, max_denominator=9))
@settings(max_examples=60, deadline=None)
def test_eval_is_homomorphism(a, b, x):
    try:
        ax, bx = a(x), b(x)
    except PoleError:
        return
    assert (a + b)(x) == ax + bx
    assert (a * b)(x) == ax * bx
