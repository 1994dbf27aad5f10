"""Dense univariate polynomial kernels over the integers.

Polynomials are tuples of Python ints in ascending degree order with no
trailing zeros; the zero polynomial is ``()``.  Large products, exact
divisions and gcds go through Kronecker substitution: a polynomial is packed
into one big integer (evaluation at a power of two), the integer operation is
done once, and the result is unpacked into balanced digits.  gmpy2 is used for
the big-integer work when it is importable.
"""

from __future__ import annotations

import math
from typing import Sequence, Tuple

try:
    import gmpy2

    _mpz = gmpy2.mpz
    _big_gcd = gmpy2.gcd

    def _pack_unsigned(digits, bits):
        return gmpy2.pack(list(digits), bits)

    def _unpack_unsigned(value, bits):
        return [int(d) for d in gmpy2.unpack(value, bits)]

except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpz = int
    _big_gcd = math.gcd

    def _pack_unsigned(digits, bits):
        nbytes = bits // 8
        data = b"".join(int(d).to_bytes(nbytes, "little") for d in digits)
        return int.from_bytes(data, "little")

    def _unpack_unsigned(value, bits):
        nbytes = bits // 8
        length = max(1, (int(value).bit_length() + bits - 1) // bits)
        data = int(value).to_bytes(length * nbytes, "little")
        return [int.from_bytes(data[k * nbytes:(k + 1) * nbytes], "little")
                for k in range(length)]


ZPoly = Tuple[int, ...]

ZERO: ZPoly = ()
ONE: ZPoly = (1,)

# below this many coefficient products the schoolbook loop wins
_SCHOOLBOOK_LIMIT = 256
_HEU_GCD_TRIES = 8


class HeuristicGCDFailed(ArithmeticError):
    pass


def strip(coeffs: Sequence[int]) -> ZPoly:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


def degree(a: ZPoly) -> int:
    return len(a) - 1


def max_norm(a: ZPoly) -> int:
    return max(map(abs, a)) if a else 0


def content(a: ZPoly) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: ZPoly) -> Tuple[int, ZPoly]:
    """Split ``a`` into ``(content, primitive part)`` with a positive leading coefficient."""
    if not a:
        return 0, ZERO
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, tuple(x // c for x in a)


def neg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return strip(out)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        out[k] -= c
    return strip(out)


def scale(a: ZPoly, c: int) -> ZPoly:
    if not c:
        return ZERO
    return tuple(x * c for x in a)


def exact_div_scalar(a: ZPoly, c: int) -> ZPoly:
    return tuple(x // c for x in a)


def shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by ``t**k`` (k >= 0)."""
    return (0,) * k + a if a else ZERO


def monomial(k: int, c: int = 1) -> ZPoly:
    return (0,) * k + (c,) if c else ZERO


# -- Kronecker packing -------------------------------------------------------

def _slot_bits(bound: int) -> int:
    """Byte-aligned slot width able to hold balanced digits of size <= bound."""
    bits = bound.bit_length() + 2
    return (bits + 7) // 8 * 8


def _pack(a: ZPoly, bits: int):
    """Evaluate ``a`` at ``2**bits``; every |coefficient| must be < 2**(bits-1)."""
    half = 1 << (bits - 1)
    return _pack_unsigned([c + half for c in a], bits) - _pack_unsigned([half] * len(a), bits)


def _unpack(value, bits: int, length: int) -> ZPoly:
    """Inverse of :func:`_pack` into ``length`` balanced digits.

    The digits always re-pack to ``value``; whether they are the intended
    polynomial depends on the caller's coefficient bound.
    """
    half = 1 << (bits - 1)
    biased = value + _pack_unsigned([half] * length, bits)
    if biased < 0:
        raise OverflowError("value does not fit the requested digit count")
    digits = _unpack_unsigned(biased, bits)
    if len(digits) > length:
        if any(digits[length:]):
            raise OverflowError("value does not fit the requested digit count")
        digits = digits[:length]
    digits += [0] * (length - len(digits))
    return strip([d - half for d in digits])


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    if len(a) * len(b) <= _SCHOOLBOOK_LIMIT:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return strip(out)
    bound = min(len(a), len(b)) * max_norm(a) * max_norm(b)
    bits = _slot_bits(bound)
    prod = _mpz(_pack(a, bits)) * _mpz(_pack(b, bits))
    return _unpack(prod, bits, len(a) + len(b) - 1)


def power(a: ZPoly, e: int) -> ZPoly:
    result = ONE
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def evaluate(a: ZPoly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def evaluate_homogeneous(a: ZPoly, num: int, den: int, deg: int) -> int:
    """Return ``den**deg * a(num/den)`` as an integer (``deg >= degree(a)``)."""
    acc = 0
    pw = 1
    # Horner on the homogenised form, lowest power of num last
    for k in range(deg, -1, -1):
        c = a[k] if k < len(a) else 0
        acc = acc * num + c * pw
        pw *= den
    return acc


def derivative(a: ZPoly) -> ZPoly:
    return strip([k * a[k] for k in range(1, len(a))])


# -- division ---------------------------------------------------------------

def divides(b: ZPoly, a: ZPoly):
    """Return ``a / b`` if ``b`` divides ``a`` in Z[t], else ``None``.

    ``b`` must be nonzero.  The quotient is recovered from one big-integer
    division and accepted only when its coefficient size proves the packed
    identity is a polynomial identity.
    """
    if not a:
        return ZERO
    if len(b) > len(a):
        return None
    if len(b) == 1:
        c = b[0]
        if any(x % c for x in a):
            return None
        return tuple(x // c for x in a)
    if a[-1] % b[-1]:
        return None
    if b[0] and a[0] % b[0]:
        return None
    qlen = len(a) - len(b) + 1
    # Mignotte: a factor of a has coefficients below 2**deg * ||a||_2
    norm2 = math.isqrt(sum(c * c for c in a)) + 1
    bits = _slot_bits(max((norm2 << qlen), max_norm(a)) * 2)
    av = _mpz(_pack(a, bits))
    bv = _mpz(_pack(b, bits))
    qv, r = divmod(av, bv)
    if r:
        return None
    try:
        q = _unpack(qv, bits, qlen)
    except OverflowError:
        return None
    if len(q) != qlen:
        return None
    if min(len(q), len(b)) * max_norm(q) * max_norm(b) >= 1 << (bits - 1):
        # packed identity alone is not conclusive at this size
        if mul(q, b) != a:
            return None
    return q


def pseudo_divmod(a: ZPoly, b: ZPoly) -> Tuple[ZPoly, ZPoly]:
    """Pseudo-division: lc(b)**(deg a - deg b + 1) * a = q*b + r."""
    if len(a) < len(b):
        return ZERO, a
    lc = b[-1]
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    db = len(b) - 1
    for k in range(len(a) - len(b), -1, -1):
        coef = r[k + db]
        q = [x * lc for x in q]
        r = [x * lc for x in r]
        if coef:
            q[k] += coef
            for j, y in enumerate(b):
                r[k + j] -= coef * y
    return strip(q), strip(r[:db])


# -- gcd ----------------------------------------------------------------------

def _gcd_prs(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive PRS gcd of two primitive polynomials (slow, always correct)."""
    while b:
        _, r = pseudo_divmod(a, b)
        a, b = b, primitive(r)[1]
    return primitive(a)[1]


def _heu_gcd(f: ZPoly, g: ZPoly) -> Tuple[ZPoly, ZPoly, ZPoly]:
    """Heuristic gcd of primitive f, g of positive degree, with cofactors.

    Evaluates at x = 2**bits, takes the integer gcd, and reads the polynomial
    back from balanced base-x digits.  Every candidate is verified by exact
    division, so a returned triple is always correct.
    """
    bound = 2 * min(max_norm(f), max_norm(g)) + 29
    # the slots must also hold every coefficient of both inputs
    bits = _slot_bits(max(bound, max_norm(f), max_norm(g)))
    length = max(len(f), len(g))
    for _ in range(_HEU_GCD_TRIES):
        fv = _mpz(_pack(f, bits))
        gv = _mpz(_pack(g, bits))
        if fv and gv:
            hv = _big_gcd(fv, gv)
            try:
                h = primitive(_unpack(hv, bits, length))[1]
            except OverflowError:
                h = ZERO
            if h:
                cf = divides(h, f)
                if cf is not None:
                    cg = divides(h, g)
                    if cg is not None:
                        return h, cf, cg
            try:
                cf = primitive(_unpack(fv // hv, bits, len(f)))[1]
            except OverflowError:
                cf = ZERO
            if cf:
                h = divides(cf, f)
                if h is not None:
                    h = primitive(h)[1]
                    cf = divides(h, f)
                    cg = divides(h, g)
                    if cf is not None and cg is not None:
                        return h, cf, cg
        bits = bits * 2 + 8
    raise HeuristicGCDFailed


def gcd_with_cofactors(a: ZPoly, b: ZPoly) -> Tuple[ZPoly, ZPoly, ZPoly]:
    """Return ``(h, a/h, b/h)`` where ``h`` is the gcd in Z[t].

    ``h`` carries the gcd of the contents and has a positive leading
    coefficient (``h = ()`` only when both inputs are zero).
    """
    if not a and not b:
        return ZERO, ZERO, ZERO
    if not a:
        return (b, ZERO, ONE) if b[-1] > 0 else (neg(b), ZERO, (-1,))
    if not b:
        return (a, ONE, ZERO) if a[-1] > 0 else (neg(a), (-1,), ZERO)
    ca, pa = primitive(a)
    cb, pb = primitive(b)
    c = math.gcd(ca, cb)
    # common power of t first; it defeats the evaluation trick otherwise
    va = next(k for k, x in enumerate(pa) if x)
    vb = next(k for k, x in enumerate(pb) if x)
    v = min(va, vb)
    if va or vb:
        pa, pb = pa[va:], pb[vb:]
    if len(pa) == 1 or len(pb) == 1:
        h, fa, fb = ONE, pa, pb
    else:
        try:
            h, fa, fb = _heu_gcd(pa, pb)
        except HeuristicGCDFailed:
            h = _gcd_prs(pa, pb)
            fa = divides(h, pa)
            fb = divides(h, pb)
    h = shift(scale(h, c), v)
    fa = shift(scale(fa, ca // c), va - v)
    fb = shift(scale(fb, cb // c), vb - v)
    return h, fa, fb


def gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    return gcd_with_cofactors(a, b)[0]
