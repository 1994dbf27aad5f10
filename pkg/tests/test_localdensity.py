from fractions import Fraction

import pytest

from cubic_density.exactalg import PolyQ, RatFunc
from cubic_density.eulerprod import primes_up_to
from cubic_density.localdensity import (UnknownId, all_unknowns, build_system, residuals,
                                        rho_local, solve, xi_table)
from cubic_density.localdensity.golden import (TABLE5, asymptotic_params, golden_check,
                                               golden_record, load, store)
from cubic_density.localdensity.system import (rho_cond, sigma, sigma_cond, sigma_prime, tau,
                                               theta)
from cubic_density.localdensity.xi import xi

T = PolyQ.x()


# -- xi tables -------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 13))
def test_xi_sums_to_one(n):
    for cond in (None, 1, 2, 3):
        if cond is not None and cond > n + 1:
            continue
        tab = xi_table(n, cond)
        assert (tab[0] + tab[1] + tab[2] + tab[3]).is_one()


@pytest.mark.parametrize("n", range(0, 13))
def test_xi_structural_zeros(n):
    for cond in (None, 1, 2, 3):
        if cond is not None and cond > n + 1:
            continue
        tab = xi_table(n, cond)
        for i in (1, 2, 3):
            if i > n + 1 or (cond is not None and i < cond):
                assert tab[i].is_zero(), (n, cond, i)


def test_xi_examples():
    assert xi_table(0)[1].is_one()
    assert xi_table(0, 1)[1].is_one()
    assert xi_table(1)[3].is_zero()
    assert xi_table(2)[3](2) == Fraction(8, 1023)


def test_xi_conditioned_worked_values():
    # n = 1 with the point condition: type 0 has probability 2(q^2 - 1)/(3q^2)
    assert xi_table(1, 1)[0] == RatFunc(2 * T ** 2 - 2, 3 * T ** 2)
    assert xi_table(1, 1)[1] == RatFunc.t_power(-2)


def test_xi_rejects_bad_condition():
    with pytest.raises(ValueError):
        xi_table(1, 3)
    with pytest.raises(ValueError):
        xi_table(-1)
    assert xi(1, 0, 3).is_zero()
    assert xi(-1, 0).is_zero()


# -- system -------------------------------------------------------------------------------

def test_sixty_four_unknowns():
    ids = all_unknowns()
    assert len(ids) == 64 == len(set(ids))
    assert UnknownId.parse(str(theta(1, 2, 3))) == theta(1, 2, 3)


@pytest.mark.parametrize("n", range(1, 10))
def test_system_partitions_unknowns(n):
    sys = build_system(n)
    for u in all_unknowns():
        assert (u in sys.forced_zeros) != (u in sys.rows)
    for row in sys:
        assert not set(row.coeffs) & sys.forced_zeros
        assert all(not c.is_zero() for c in row.coeffs.values())


def test_forced_zeros_n2():
    fz = build_system(2).forced_zeros
    assert sigma(3) in fz
    assert tau(1, 2) in fz and tau(2, 1) in fz
    assert tau(1, 1) not in fz
    assert all(theta(i, j, k) in fz for i in (1, 2, 3) for j in (1, 2, 3) for k in (1, 2, 3))


def test_n1_reduces_to_worked_example():
    sys = build_system(1)
    assert tau(1, 1) in sys.forced_zeros
    assert set(sys.rows) == {UnknownId("rho"), rho_cond(1), rho_cond(2), sigma(1),
                             sigma_prime(1), sigma_cond(1, 1)}
    table = solve(1)
    assert table[sigma_cond(1, 1)].is_zero()
    # sigma'_1 = 1 - 1/t + rho^(1)/t^2
    t = RatFunc.t()
    assert table[sigma_prime(1)] == 1 - 1 / t + table[rho_cond(1)] / t ** 2


def test_n9_has_no_forced_theta():
    sys = build_system(9)
    assert not any(u.kind == "theta" for u in sys.forced_zeros)
    assert len(sys.rows) == 64


def test_stage_sizes_bounded():
    sys = build_system(9)
    sizes = {s: len(sys.rows_in_stage(s)) for s in ("theta", "middle", "final")}
    assert sizes == {"theta": 27, "middle": 27, "final": 10}


def test_build_rejects_n0():
    with pytest.raises(ValueError):
        build_system(0)


# -- solutions --------------------------------------------------------------------------------

def test_rho1_closed_form():
    expected = RatFunc(2 * T ** 4 + 3 * T ** 3 + T ** 2 + 3 * T + 2,
                       3 * (T ** 4 + T ** 3 + T ** 2 + T + 1))
    assert rho_local(1) == expected
    assert rho_local(1)(2) == Fraction(68, 93)


def test_rho2_numerator():
    g2 = T ** 9 - T ** 8 + T ** 6 - T ** 4 + T ** 3 + T ** 2 - 2 * T + 1
    one_minus = 1 - rho_local(2)
    assert one_minus.num == g2
    # g_2(2) = 512 - 256 + 64 - 16 + 8 + 4 - 4 + 1 = 313
    assert one_minus(2) == Fraction(313, 18615)


def test_n9_all_one():
    table = solve(9)
    assert all(v.is_one() for v in table.solution.values())
    assert rho_local(9).is_one() and rho_local(10).is_one()


def test_rho_local_rejects_nonpositive():
    with pytest.raises(ValueError):
        rho_local(0)


@pytest.mark.parametrize("n", range(1, 10))
def test_residuals_vanish(n):
    assert residuals(build_system(n), solve(n)) == {}


@pytest.mark.parametrize("n", range(1, 9))
def test_solution_in_unit_interval(n):
    assert solve(n).check_bounds(primes_up_to(100)) == []


# -- golden polynomials ------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_golden(n):
    assert golden_check(n)


def test_golden_mutation_detected():
    rec = golden_record(3)
    g = rec.g + T ** 5
    value = 1 - rho_local(3)
    assert not (value.num * rec.h == g * value.den)


def test_golden_rejects_n9():
    with pytest.raises(ValueError):
        golden_check(9)


@pytest.mark.parametrize("n", sorted(TABLE5))
def test_asymptotic_params(n):
    assert asymptotic_params(n) == TABLE5[n]


def test_asymptotic_examples():
    assert asymptotic_params(2) == (3, 3)
    assert asymptotic_params(4) == (9, 22)
    assert asymptotic_params(7) == (27, 129)


def test_golden_h_nonvanishing_at_primes():
    for n in range(1, 9):
        h = golden_record(n).h
        assert all(h(p) != 0 for p in primes_up_to(100))


def test_cache_round_trip(tmp_path):
    value = 1 - rho_local(4)
    path = store(4, value, tmp_path)
    assert load(4, tmp_path) == value
    data = path.read_text().replace('"g": [', '"g": [1, ', 1)
    path.write_text(data)
    assert load(4, tmp_path) is None
    assert load(5, tmp_path) is None
