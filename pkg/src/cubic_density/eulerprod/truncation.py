"""Certified truncation of the Euler product of local densities."""

from __future__ import annotations

import decimal
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..exactalg import PolyQ, zpoly
from ..localdensity import one_minus_rho
from ..localdensity.golden import asymptotic_params
from .primes import primes_up_to
from .zeta import DEFAULT_PARAMS, TailBoundParams, euler_factor_product, euler_maclaurin_upper

try:
    from gmpy2 import gcd as _gcd, mpz as _mpz
except ImportError:  # pragma: no cover
    from math import gcd as _gcd
    _mpz = int

CERTIFIED_RANGE = range(2, 9)
# significant digits kept in a reported error bound
_BOUND_DIGITS = 6
_LOG10_2 = 0.30102999566398120


def _int_str(v: int) -> str:
    """Decimal digits of ``v`` without the interpreter's length limit."""
    return str(_mpz(v))


def _check_n(n: int) -> None:
    if n not in CERTIFIED_RANGE:
        raise ValueError(f"certified products exist for 2 <= n <= 8, got {n}")


@dataclass(frozen=True)
class AsympParams:
    gamma: int
    delta: int


def asymp_params(n: int) -> AsympParams:
    _check_n(n)
    return AsympParams(*asymptotic_params(n))


# -- decimal helpers ------------------------------------------------------------

def _floor_log10(x: Fraction) -> int:
    """Largest e with 10**e <= x, for x > 0."""
    e = int((x.numerator.bit_length() - x.denominator.bit_length()) * _LOG10_2) - 1
    while Fraction(10) ** e > x:
        e -= 1
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    return e


def _scaled_round(x: Fraction, places: int, up: bool = False) -> int:
    """``x * 10**places`` rounded half-even, or up (ceiling) when ``up``."""
    y = x * Fraction(10) ** places
    if up:
        return -((-y.numerator) // y.denominator)
    return round(y)


def format_significant(x: Fraction, digits: int, up: bool = False) -> str:
    """``x`` in scientific notation with ``digits`` significant digits."""
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    e = _floor_log10(x)
    m = _scaled_round(x, digits - 1 - e, up)
    if m >= 10 ** digits:  # rounding carried into a new digit
        e += 1
        m = _scaled_round(x, digits - 1 - e, up)
    s = str(m)
    mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{sign}{mant}e{e:+d}" if e else f"{sign}{mant}"


def format_fixed(x: Fraction, places: int) -> str:
    """``x`` rounded half-even to ``places`` decimal places."""
    m = _scaled_round(x, places)
    sign = "-" if m < 0 else ""
    s = str(abs(m)).rjust(places + 1, "0")
    return f"{sign}{s[:-places]}.{s[-places:]}" if places else f"{sign}{s}"


# -- root bounds -----------------------------------------------------------------

def _root_bound_holds(B: Fraction, eps: Fraction, gamma: int) -> bool:
    """Whether ``eps >= 1 - B**(-1/gamma)``, i.e. ``B * (1 - eps)**gamma <= 1``."""
    if eps >= 1:
        return True
    return B * (1 - eps) ** gamma <= 1


def root_error_bound(B: Fraction, gamma: int) -> Fraction:
    """A short decimal upper bound on ``1 - B**(-1/gamma)`` for ``B >= 1``.

    The root is approximated in decimal arithmetic and rounded up; the
    result is then confirmed by an exact rational check and bumped until it
    passes.
    """
    if B < 1:
        raise ValueError("B must be >= 1")
    if B == 1:
        return Fraction(0)
    x = B - 1
    prec = max(50, -_floor_log10(x) + 40)
    with decimal.localcontext() as ctx:
        ctx.prec = prec
        xd = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
        ln = (1 + xd).ln() if xd > decimal.Decimal("1e-3") else _log1p(xd, ctx)
        eps_d = -_expm1(-ln / gamma, ctx)
    approx = Fraction(eps_d)
    e = _floor_log10(approx)
    step = Fraction(10) ** (e - _BOUND_DIGITS + 1)
    eps = Fraction(_scaled_round(approx, _BOUND_DIGITS - 1 - e, up=True)) * step
    while not _root_bound_holds(B, eps, gamma):
        eps += step
    return eps


def _log1p(x, ctx):
    # alternating series, |x| small
    term, acc, k = x, x, 1
    tiny = decimal.Decimal(10) ** (-ctx.prec - 5)
    while abs(term) > tiny * abs(acc):
        k += 1
        term = -term * x
        acc += term / k
    return acc


def _expm1(x, ctx):
    if abs(x) > decimal.Decimal("1e-3"):
        return x.exp() - 1
    term, acc, k = x, x, 1
    tiny = decimal.Decimal(10) ** (-ctx.prec - 5)
    while abs(term) > tiny * abs(acc):
        k += 1
        term = term * x / k
        acc += term
    return acc


def digits_certified(error_bound: Fraction) -> int:
    """Largest D with ``error_bound <= 10**-D``."""
    if error_bound <= 0:
        raise ValueError("a zero error bound certifies every digit")
    e = _floor_log10(error_bound)
    return -e if Fraction(10) ** e == error_bound else -e - 1


@dataclass(frozen=True)
class TruncationCertificate:
    n: int
    A: int
    params: TailBoundParams
    B: Fraction
    error_bound: Fraction
    digits: int

    def to_json(self) -> dict:
        return {"n": self.n, "A": self.A, "M": self.params.M, "I": self.params.I,
                "B": f"{_int_str(self.B.numerator)}/{_int_str(self.B.denominator)}",
                "error_bound": format_significant(self.error_bound, 2, up=True),
                "digits": self.digits}


def _largest_prime(A) -> int:
    ps = primes_up_to(int(A))
    if not ps:
        return 1
    return ps[-1]


def truncation_error_bound(n: int, A, params: TailBoundParams = DEFAULT_PARAMS) -> Tuple[Fraction, Fraction]:
    """``(B, eps)`` with ``zeta_{>A}(delta_n) <= B`` and ``|rho - prod_{p<=A}| <= eps``."""
    _check_n(n)
    gamma, delta = asymptotic_params(n)
    B = euler_factor_product(A, delta) * euler_maclaurin_upper(delta, params)
    return B, root_error_bound(B, gamma)


def certificate(n: int, A, params: TailBoundParams = DEFAULT_PARAMS) -> TruncationCertificate:
    B, eps = truncation_error_bound(n, A, params)
    return TruncationCertificate(n, _largest_prime(A), params, B, eps, digits_certified(eps))


class PlanningError(ValueError):
    pass


def plan_truncation(n: int, D: int, A_max: int, params: TailBoundParams = DEFAULT_PARAMS) -> TruncationCertificate:
    """Smallest prime cutoff A <= A_max whose certified error is at most 10**-D."""
    _check_n(n)
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    gamma, delta = asymptotic_params(n)
    S = euler_maclaurin_upper(delta, params)
    # eps <= 10^-D  <=>  B * (1 - 10^-D)^gamma <= 1
    ten = 10 ** D
    lhs_factor = (ten - 1) ** gamma
    rhs_factor = ten ** gamma
    num, den = _mpz(S.numerator), _mpz(S.denominator)
    for p in [1] + primes_up_to(A_max):
        if p > 1:
            ps = p ** delta
            num *= ps - 1
            den *= ps
        if num * lhs_factor <= den * rhs_factor:
            cert = certificate(n, p, params)
            # the short decimal form of eps may round past 10^-D; keep scanning then
            if cert.error_bound <= Fraction(1, ten):
                return cert
    achieved = certificate(n, _largest_prime(A_max), params)
    raise PlanningError(f"no A <= {A_max} certifies 10^-{D} for n={n}; "
                        f"best is {achieved.digits} digits at A={achieved.A}")


# -- exact products ----------------------------------------------------------------

def _product_tree(values: Sequence[int]) -> int:
    values = [_mpz(v) for v in values]
    if not values:
        return _mpz(1)
    while len(values) > 1:
        values = [values[i] * values[i + 1] if i + 1 < len(values) else values[i]
                  for i in range(0, len(values), 2)]
    return values[0]


def truncated_product(n: int, A, primes: Optional[Sequence[int]] = None) -> Fraction:
    """Exact ``prod_{p <= A} rho_n(p)`` (or over ``primes`` when given)."""
    if primes is None:
        primes = primes_up_to(int(A))
    f = one_minus_rho(n)
    g, h = f.numerator_coeffs, f.denominator_coeffs
    nums, dens = [], []
    for p in primes:
        hp = zpoly.evaluate(h, p)
        nums.append(hp - zpoly.evaluate(g, p))
        dens.append(hp)
    num, den = _product_tree(nums), _product_tree(dens)
    d = _gcd(num, den)
    return Fraction(int(num // d), int(den // d), _normalize=False) if d != 1 \
        else Fraction(int(num), int(den), _normalize=False)


@dataclass(frozen=True)
class CertifiedValue:
    value: Fraction
    certificate: TruncationCertificate

    @property
    def decimal(self) -> str:
        return format_fixed(self.value, self.certificate.digits)

    def one_minus(self, digits: int = 4) -> str:
        return format_significant(1 - self.value, digits)

    def to_json(self) -> dict:
        out = self.certificate.to_json()
        out["value"] = self.decimal
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())


DEFAULT_A_MAX = 20000


def rho_global(n: int, D: int, A_max: int = DEFAULT_A_MAX,
               params: TailBoundParams = DEFAULT_PARAMS) -> CertifiedValue:
    cert = plan_truncation(n, D, A_max, params)
    return CertifiedValue(truncated_product(n, cert.A), cert)


def certified_at(n: int, A, params: TailBoundParams = DEFAULT_PARAMS) -> CertifiedValue:
    """The truncated product at a given cutoff with whatever accuracy it certifies."""
    cert = certificate(n, A, params)
    return CertifiedValue(truncated_product(n, cert.A), cert)


# -- the comparison inequality ------------------------------------------------------

@dataclass(frozen=True)
class AsymptoteCheck:
    ok: bool
    witness: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_asymptote_inequality(n: int, prime_limit: int = 10 ** 4,
                                g: Optional[PolyQ] = None, h: Optional[PolyQ] = None) -> AsymptoteCheck:
    """Check ``gamma * p**delta * g(p) <= h(p)`` at every prime up to the limit.

    ``g`` and ``h`` default to the reduced numerator and denominator of
    ``1 - rho_n``; passing them allows checking other representations.
    """
    gamma, delta = asymptotic_params(n)
    if g is None or h is None:
        f = one_minus_rho(n)
        gz, hz = f.numerator_coeffs, f.denominator_coeffs
    else:
        gz, gd = g.integer_part
        hz, hd = h.integer_part
        # g/h = (gz * hd) / (hz * gd)
        gz, hz = zpoly.scale(gz, hd), zpoly.scale(hz, gd)
        if hz[-1] < 0:
            gz, hz = zpoly.neg(gz), zpoly.neg(hz)
    if zpoly.degree(hz) - zpoly.degree(gz) != delta:
        return AsymptoteCheck(False, None, "degree gap differs from delta")
    if hz[-1] != gamma * gz[-1]:
        return AsymptoteCheck(False, None, "leading coefficients are not in ratio gamma")
    for p in primes_up_to(prime_limit):
        hp = zpoly.evaluate(hz, p)
        if hp <= 0 or gamma * p ** delta * zpoly.evaluate(gz, p) > hp:
            return AsymptoteCheck(False, p, f"inequality fails at p = {p}")
    return AsymptoteCheck(True)
