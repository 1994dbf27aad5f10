"""The closed forms of 1 - rho_n(t) for 1 <= n <= 8 in their published factored shape.

Each ``g_n / h_n`` need not be reduced, so comparison with a solved value is
by cross multiplication.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

from ..exactalg import PolyQ, RatFunc
from ..exactalg import zpoly
from .solve import one_minus_rho

GOLDEN_RANGE = range(1, 9)

# (gamma, delta) with g_n/h_n ~ 1/(gamma * t**delta)
TABLE5 = {2: (3, 3), 3: (3, 10), 4: (9, 22), 5: (9, 43), 6: (9, 78), 7: (27, 129), 8: (27, 201)}

CACHE_ENV = "CUBIC_DENSITY_CACHE"



def _g1(p):
    return (p**2 + 1)**2


def _h1(p):
    return 3 * (p**4 + p**3 + p**2 + p + 1)


def _g2(p):
    return p**9 - p**8 + p**6 - p**4 + p**3 + p**2 - 2 * p + 1


def _h2(p):
    return 3 * (p**6 + p**3 + 1) * (p**4 + 1) * (p**2 + 1)


def _g3(p):
    return (
        (3 * p**26 + p**24 + p**23 + 4 * p**22 - 3 * p**21 + 3 * p**20 + 2 * p**19 + 2 * p**18 -
        p**17 + p**14 + p**13 - 2 * p**12 + 3 * p**11 + 3 * p**7) * (p**2 + 1) * (p + 1)**2 *
        (p - 1)**4
    )


def _h3(p):
    return (
        9 * (p**13 - 1) * (p**7 + 1) * (p**7 - 1) * (p**6 + 1) * (p**5 - 1) * (p**3 + 1) *
        (p**3 - 1)
    )


def _g4(p):
    return (
        (p**46 + 3 * p**41 + p**40 - p**39 + p**37 + p**36 + p**35 - 3 * p**34 + 3 * p**27 -
        p**26 + p**25 + p**19) * (p**2 + 1) * (p + 1)**2 * (p - 1)**4
    )


def _h4(p):
    return (
        9 * (p**19 - 1) * (p**17 - 1) * (p**10 + 1) * (p**9 + 1) * (p**9 - 1) * (p**7 - 1) *
        (p**5 + 1)
    )


def _g5(p):
    return (
        (3 * p**91 - 3 * p**90 + 3 * p**88 + 3 * p**85 - 3 * p**84 + 3 * p**82 - 3 * p**81 + 3 *
        p**79 + 3 * p**78 + 3 * p**76 - 3 * p**75 + 3 * p**73 - 2 * p**72 + p**71 + 4 * p**70 -
        3 * p**69 + 3 * p**67 - 3 * p**66 + 3 * p**64 - 3 * p**62 + 3 * p**61 + 3 * p**59 + 3 *
        p**58 - 3 * p**56 + 3 * p**55 - 3 * p**53 + 3 * p**52 + 3 * p**49 - 3 * p**47 + 3 *
        p**46 - 3 * p**44 + 3 * p**43 - 3 * p**41 + 3 * p**40 - 3 * p**38 + 3 * p**37) * (p**5 -
        1) * (p**2 + 1) * (p + 1)**2 * (p - 1)**4
    )


def _h5(p):
    return (
        27 * (p**27 - 1) * (p**25 - 1) * (p**23 - 1) * (p**14 + 1) * (p**13 + 1) * (p**13 - 1) *
        (p**12 + 1) * (p**7 + 1) * (p**7 - 1) * (p**6 + 1)
    )


def _g6(p):
    return (3 * p**105 + p**97 + p**96 + p**95 - 3 * p**93 + 3 * p**81) * (p + 1)**2 * (p - 1)**7


def _h6(p):
    return (
        27 * (p**31 - 1) * (p**24 - p**23 + p**19 - p**18 + p**17 - p**16 + p**14 - p**13 +
        p**12 - p**11 + p**10 - p**8 + p**7 - p**6 + p**5 - p + 1) * (p**20 - p**19 + p**17 -
        p**16 + p**14 - p**13 + p**11 - p**10 + p**9 - p**7 + p**6 - p**4 + p**3 - p + 1) *
        (p**17 + 1) * (p**17 - 1) * (p**16 + 1) * (p**11 - 1) * (p**8 + p**7 - p**5 - p**4 -
        p**3 + p + 1) * (p**8 - p**7 + p**5 - p**4 + p**3 - p + 1) * (p**8 + 1) * (p**6 + 1) *
        (p**5 + 1) * (p**5 - 1) * (p**4 + 1) * (p**3 + 1) * (p**3 - 1)**3
    )


def _g7(p):
    return (p**4 + 1) * (p**2 + 1)**2 * (p + 1)**4 * (p - 1)**9 * p**141


def _h7(p):
    return (
        27 * (p**43 - 1) * (p**41 - 1) * (p**24 - p**23 + p**21 - p**20 + p**18 - p**17 + p**15
        - p**14 + p**12 - p**10 + p**9 - p**7 + p**6 - p**4 + p**3 - p + 1) * (p**22 + 1) *
        (p**20 + 1) * (p**19 + 1) * (p**19 - 1) * (p**13 - 1) * (p**12 + p**11 - p**9 - p**8 +
        p**6 - p**4 - p**3 + p + 1) * (p**12 - p**11 + p**9 - p**8 + p**6 - p**4 + p**3 - p + 1)
        * (p**11 + 1) * (p**11 - 1) * (p**10 + 1) * (p**8 - p**7 + p**5 - p**4 + p**3 - p + 1) *
        (p**7 + 1) * (p**5 + 1) * (p**5 - 1) * (p**3 - 1)**3
    )


def _g8(p):
    return (p**9 - 1) * (p**7 - 1) * (p**4 + 1) * (p**2 + 1)**2 * (p + 1)**3 * (p - 1)**9 * p**219


def _h8(p):
    return (
        27 * (p**53 - 1) * (p**49 - 1) * (p**47 - 1) * (p**40 - p**39 + p**35 - p**34 + p**30 -
        p**28 + p**25 - p**23 + p**20 - p**17 + p**15 - p**12 + p**10 - p**6 + p**5 - p + 1) *
        (p**32 - p**31 + p**29 - p**28 + p**26 - p**25 + p**23 - p**22 + p**20 - p**19 + p**17 -
        p**16 + p**15 - p**13 + p**12 - p**10 + p**9 - p**7 + p**6 - p**4 + p**3 - p + 1) *
        (p**27 + 1) * (p**27 - 1) * (p**26 + 1) * (p**25 + 1) * (p**25 - 1) * (p**24 + 1) *
        (p**17 - 1) * (p**13 + 1) * (p**13 - 1) * (p**12 + 1) * (p**11 - 1) * (p**6 + 1) *
        (p**3 - 1)**3
    )


_FACTORED: Dict[int, Tuple[Callable, Callable]] = {
    1: (_g1, _h1),
    2: (_g2, _h2),
    3: (_g3, _h3),
    4: (_g4, _h4),
    5: (_g5, _h5),
    6: (_g6, _h6),
    7: (_g7, _h7),
    8: (_g8, _h8),
}


@dataclass(frozen=True)
class GoldenRecord:
    n: int
    g: PolyQ
    h: PolyQ

    @property
    def ratio(self) -> RatFunc:
        return RatFunc(self.g, self.h)


_RECORDS: Dict[int, GoldenRecord] = {}


def _check_n(n: int) -> None:
    if n not in GOLDEN_RANGE:
        raise ValueError(f"golden polynomials exist only for 1 <= n <= 8, got {n}")


def golden_record(n: int) -> GoldenRecord:
    _check_n(n)
    if n not in _RECORDS:
        g, h = _FACTORED[n]
        t = PolyQ.x()
        _RECORDS[n] = GoldenRecord(n, PolyQ(g(t).coefficients), PolyQ(h(t).coefficients))
    return _RECORDS[n]


def matches(value: RatFunc, g: PolyQ, h: PolyQ) -> bool:
    """``value == g/h`` by cross multiplication."""
    if not h:
        return False
    return value.num * h == g * value.den


def golden_check(n: int, value: Optional[RatFunc] = None) -> bool:
    """Whether ``1 - rho_local(n)`` (or the supplied ``value``) equals ``g_n/h_n``."""
    rec = golden_record(n)
    if value is None:
        value = one_minus_rho(n)
    return matches(value, rec.g, rec.h)


def asymptotic_params(n: int, value: Optional[RatFunc] = None) -> Tuple[int, int]:
    """``(gamma, delta)`` with ``1 - rho_n(t) ~ 1/(gamma * t**delta)`` as t grows."""
    if n not in TABLE5:
        raise ValueError(f"asymptotic parameters are tabulated for 2 <= n <= 8, got {n}")
    if value is None:
        value = one_minus_rho(n)
    num, den = value.numerator_coeffs, value.denominator_coeffs
    delta = zpoly.degree(den) - zpoly.degree(num)
    if den[-1] % num[-1]:
        raise ArithmeticError(f"n={n}: leading-coefficient ratio {den[-1]}/{num[-1]} is not an integer")
    gamma = den[-1] // num[-1]
    if gamma <= 0 or delta <= 0:
        raise ArithmeticError(f"n={n}: unexpected asymptotics gamma={gamma}, delta={delta}")
    if (gamma, delta) != TABLE5[n]:
        raise ArithmeticError(f"n={n}: computed (gamma, delta) = {(gamma, delta)}, tabulated {TABLE5[n]}")
    return gamma, delta


# -- cache ------------------------------------------------------------------

def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, Path.home() / ".cache" / "cubic_density"))


def record_json(n: int, value: RatFunc) -> dict:
    out = {"n": n, "g": list(value.numerator_coeffs), "h": list(value.denominator_coeffs),
           "gamma": None, "delta": None}
    if n in TABLE5:
        out["gamma"], out["delta"] = asymptotic_params(n, value)
    return out


def store(n: int, value: RatFunc, directory: Optional[Path] = None) -> Path:
    directory = Path(directory or cache_dir())
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"rho_{n}.json"
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(record_json(n, value)))
    tmp.replace(path)
    return path


def load(n: int, directory: Optional[Path] = None) -> Optional[RatFunc]:
    """Cached ``1 - rho_n`` if present and valid, else None.

    A cached entry for n <= 8 is accepted only if it still matches the
    golden polynomials.
    """
    path = Path(directory or cache_dir()) / f"rho_{n}.json"
    try:
        data = json.loads(path.read_text())
        value = RatFunc(PolyQ(data["g"]), PolyQ(data["h"]))
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError):
        return None
    if data.get("n") != n:
        return None
    if n in GOLDEN_RANGE and not golden_check(n, value):
        return None
    return value
