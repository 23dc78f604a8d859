"""Validated interval arithmetic over exact rationals.

An :class:`Enclosure` is a closed interval ``[lo, hi]`` with Fraction
endpoints, guaranteed to contain the real number it stands for.  All
operations are outward-safe: the result encloses every value the operation
can take over the inputs.  Nothing here ever rounds toward the true value.

Transcendental evaluation (sin, cos, exp, sqrt and the constant pi) uses
Taylor expansions with explicit Lagrange remainder bounds.  Arguments of
sin/cos are reduced with a certified pi enclosure (Machin-type series with
an alternating-tail bracket).  Two contracts hold for point inputs:

* width of the result is at most ``2**-precision``;
* refinement is monotone: the enclosure computed at precision ``p + 8`` is
  a sub-interval of the one computed at precision ``p``.

Monotonicity is structural, not accidental: a request at precision ``p``
returns the intersection of independent evaluations at every effort rung
``8, 16, ..., 8*ceil(p/8)``, and a higher request only ever appends rungs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rational import (
    HALF,
    ONE,
    ZERO,
    RationalLike,
    as_fraction,
    dyadic_ceil,
    dyadic_floor,
    format_fraction,
    pow2,
)


class DivisorContainsZero(ZeroDivisionError):
    """Interval division where the divisor encloses zero."""


class NegativeSqrtDomain(ValueError):
    """Square root requested on an enclosure that reaches below zero."""


@dataclass(frozen=True, slots=True)
class Enclosure:
    """Closed rational interval certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", as_fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo={self.lo} > hi={self.hi}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def point(value: RationalLike) -> "Enclosure":
        q = as_fraction(value)
        return Enclosure(q, q)

    @staticmethod
    def of(lo: RationalLike, hi: RationalLike) -> "Enclosure":
        return Enclosure(as_fraction(lo), as_fraction(hi))

    # -- inspection ---------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def mag(self) -> Fraction:
        """Upper bound for |x| over the enclosure."""
        return max(-self.lo, self.hi)

    def mignitude(self) -> Fraction:
        """Lower bound for |x| over the enclosure (0 if it straddles 0)."""
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return -self.hi
        return ZERO

    def contains(self, other: "Enclosure | RationalLike") -> bool:
        if isinstance(other, Enclosure):
            return self.lo <= other.lo and other.hi <= self.hi
        q = as_fraction(other)
        return self.lo <= q <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        o = _coerce(other)
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __sub__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        o = _coerce(other)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enclosure(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        o = _coerce(other)
        if o.lo <= 0 <= o.hi:
            raise DivisorContainsZero(f"divisor {o} encloses zero")
        return self * Enclosure(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other: "Enclosure | RationalLike") -> "Enclosure":
        return _coerce(other) / self

    def __abs__(self) -> "Enclosure":
        return Enclosure(self.mignitude(), self.mag())

    def square(self) -> "Enclosure":
        """Tight interval square (never dips below 0)."""
        if self.lo >= 0:
            return Enclosure(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Enclosure(self.hi * self.hi, self.lo * self.lo)
        m = self.mag()
        return Enclosure(ZERO, m * m)

    def intpow(self, n: int) -> "Enclosure":
        if n < 0:
            return Enclosure.point(1) / self.intpow(-n)
        result = Enclosure.point(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base.square() if n > 1 else base
            n >>= 1
        return result

    # -- lattice ------------------------------------------------------

    def intersect(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(min(self.lo, other.lo), max(self.hi, other.hi))

    def outward(self, bits: int) -> "Enclosure":
        """Round outward onto the 2**-bits grid (caps denominator growth)."""
        return Enclosure(dyadic_floor(self.lo, bits), dyadic_ceil(self.hi, bits))

    # -- serialization ------------------------------------------------

    def as_json(self) -> dict[str, str]:
        return {"lo": format_fraction(self.lo), "hi": format_fraction(self.hi)}

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _coerce(value: "Enclosure | RationalLike") -> Enclosure:
    if isinstance(value, Enclosure):
        return value
    return Enclosure.point(value)


def enc_arith(kind: str, a: Enclosure, b: Enclosure) -> Enclosure:
    """Named arithmetic entry point: kind in {add, sub, mul, div}."""
    ops = {
        "add": Enclosure.__add__,
        "sub": Enclosure.__sub__,
        "mul": Enclosure.__mul__,
        "div": Enclosure.__truediv__,
    }
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown arithmetic kind {kind!r}") from None
    return op(_coerce(a), _coerce(b))


# ---------------------------------------------------------------------------
# pi and e brackets
# ---------------------------------------------------------------------------

_LADDER_STEP = 8


def _ladder(precision: int) -> range:
    top = _LADDER_STEP * (max(precision, 1) + _LADDER_STEP - 1) // _LADDER_STEP
    return range(_LADDER_STEP, top + 1, _LADDER_STEP)


@lru_cache(maxsize=None)
def _atan_inv_bracket(inv: int, bits: int) -> tuple[Fraction, Fraction]:
    """Bracket for atan(1/inv), inv >= 2, via the alternating Gregory series.

    The value always lies between consecutive partial sums, so the bracket
    needs no separate remainder estimate, and brackets at larger term
    counts are nested inside earlier ones.
    """
    x = Fraction(1, inv)
    x2 = x * x
    cutoff = pow2(-bits)
    s = ZERO
    p = x
    n = 1
    sign = 1
    while True:
        s_next = s + sign * p / n
        p_next = p * x2
        n_next = n + 2
        step = p_next / n_next
        if step <= cutoff:
            other = s_next - sign * step
            return (min(s_next, other), max(s_next, other))
        s = s_next
        p = p_next
        n = n_next
        sign = -sign


@lru_cache(maxsize=None)
def _pi_bracket(bits: int) -> tuple[Fraction, Fraction]:
    """Machin: pi = 16 atan(1/5) - 4 atan(1/239)."""
    a_lo, a_hi = _atan_inv_bracket(5, bits + 8)
    b_lo, b_hi = _atan_inv_bracket(239, bits + 8)
    return (16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo)


def pi_const(precision: int = 64) -> Enclosure:
    """Certified enclosure of pi with width at most 2**-precision."""
    bits = 32 * ((max(precision, 1) + 31) // 32)
    return Enclosure(*_pi_bracket(bits))


@lru_cache(maxsize=None)
def _e_bracket(bits: int) -> tuple[Fraction, Fraction]:
    """Bracket of e = exp(1): partial sum plus a closed-form positive tail."""
    s = ZERO
    term = ONE
    n = 0
    cutoff = pow2(-(bits + 4))
    while True:
        s += term
        n += 1
        term /= n
        # sum_{j>=n} 1/j! < (1/n!) * (n+1)/n
        tail = term * (n + 1) / n
        if tail <= cutoff:
            return (s, s + tail)


# ---------------------------------------------------------------------------
# Fixed-point Taylor cores
#
# Exact Fraction arithmetic is too slow for the inner loops, so the reduced
# arguments are moved onto the integer grid 1/2**W (W = bits + 32) and every
# operation rounds outward on that grid.  Each rounding costs at most one
# grid ulp, far below the 2**-bits target, and soundness is preserved
# because rounding is always away from the interval.
# ---------------------------------------------------------------------------


def _fx_floor(q: Fraction, w: int) -> int:
    return (q.numerator << w) // q.denominator


def _fx_ceil(q: Fraction, w: int) -> int:
    return -((-q.numerator << w) // q.denominator)


def _fxi_mul(alo: int, ahi: int, blo: int, bhi: int, w: int) -> tuple[int, int]:
    p1 = alo * blo
    p2 = alo * bhi
    p3 = ahi * blo
    p4 = ahi * bhi
    lo = min(p1, p2, p3, p4)
    hi = max(p1, p2, p3, p4)
    return (lo >> w, -((-hi) >> w))


def _fxi_sq(lo: int, hi: int, w: int) -> tuple[int, int]:
    if lo >= 0:
        return ((lo * lo) >> w, -((-(hi * hi)) >> w))
    if hi <= 0:
        return ((hi * hi) >> w, -((-(lo * lo)) >> w))
    m = max(-lo, hi)
    return (0, -((-(m * m)) >> w))


def _fxi_divint(lo: int, hi: int, n: int) -> tuple[int, int]:
    """Divide by a positive integer, outward."""
    return (lo // n, -((-hi) // n))


def _taylor_sin_fx(rlo: int, rhi: int, w: int, bits: int) -> tuple[int, int]:
    """sin on |r| <= 1.7 (fixed point); |remainder| <= B**N / N!."""
    b_abs = max(-rlo, rhi, 0)
    cutoff = 1 << (w - bits - 4) if w > bits + 4 else 1
    sq = _fxi_sq(rlo, rhi, w)
    s_lo, s_hi = rlo, rhi
    p_lo, p_hi = rlo, rhi  # running term r**n / n!
    bound = b_abs
    n = 1
    sign = 1
    one_fx = 1 << w
    while True:
        bound = -((-bound * b_abs) >> w)
        bound = -((-bound * b_abs) >> w)
        bound = -((-bound) // ((n + 1) * (n + 2)))
        n += 2
        if bound <= cutoff:
            break
        sign = -sign
        p_lo, p_hi = _fxi_mul(p_lo, p_hi, sq[0], sq[1], w)
        p_lo, p_hi = _fxi_divint(p_lo, p_hi, (n - 1) * n)
        if sign < 0:
            s_lo -= p_hi
            s_hi -= p_lo
        else:
            s_lo += p_lo
            s_hi += p_hi
    return (max(s_lo - bound, -one_fx), min(s_hi + bound, one_fx))


def _taylor_cos_fx(rlo: int, rhi: int, w: int, bits: int) -> tuple[int, int]:
    b_abs = max(-rlo, rhi, 0)
    cutoff = 1 << (w - bits - 4) if w > bits + 4 else 1
    sq = _fxi_sq(rlo, rhi, w)
    one_fx = 1 << w
    s_lo, s_hi = one_fx, one_fx
    p_lo, p_hi = one_fx, one_fx
    bound = one_fx
    n = 0
    sign = 1
    while True:
        bound = -((-bound * b_abs) >> w)
        bound = -((-bound * b_abs) >> w)
        bound = -((-bound) // ((n + 1) * (n + 2)))
        n += 2
        if bound <= cutoff:
            break
        sign = -sign
        p_lo, p_hi = _fxi_mul(p_lo, p_hi, sq[0], sq[1], w)
        p_lo, p_hi = _fxi_divint(p_lo, p_hi, (n - 1) * n)
        if sign < 0:
            s_lo -= p_hi
            s_hi -= p_lo
        else:
            s_lo += p_lo
            s_hi += p_hi
    return (max(s_lo - bound, -one_fx), min(s_hi + bound, one_fx))


def _taylor_sin(rlo: Fraction, rhi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    w = bits + 32
    lo, hi = _taylor_sin_fx(_fx_floor(rlo, w), _fx_ceil(rhi, w), w, bits)
    return (Fraction(lo, 1 << w), Fraction(hi, 1 << w))


# ---------------------------------------------------------------------------
# sin / cos with argument reduction
# ---------------------------------------------------------------------------


def _approx_ratio_round(x: Fraction, denom_lo: Fraction) -> int:
    """round(x / d) where d ~ denom_lo; only needs to land near the truth."""
    q = x / denom_lo
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


@lru_cache(maxsize=1 << 10)
def _pi_fx(w: int, pb: int) -> tuple[int, int]:
    plo, phi = _pi_bracket(pb)
    return (_fx_floor(plo, w), _fx_ceil(phi, w))


@lru_cache(maxsize=1 << 14)
def _naive_circular(which: str, xlo: Fraction, xhi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """One effort rung of sin/cos on a narrow interval (width <= ~1)."""
    w = bits + 32
    a_lo = _fx_floor(xlo, w)
    a_hi = _fx_ceil(xhi, w)
    mid = Fraction((a_lo + a_hi) // 2, 1 << w)
    m = _approx_ratio_round(2 * mid, _pi_bracket(64)[0])
    if m != 0:
        w = bits + 32 + m.bit_length()
        a_lo = _fx_floor(xlo, w)
        a_hi = _fx_ceil(xhi, w)
        p_lo, p_hi = _pi_fx(w, bits + 24 + m.bit_length())
        u, v = m * p_lo, m * p_hi
        if u > v:
            u, v = v, u
        r_lo = a_lo - (-((-v) // 2))
        r_hi = a_hi - (u // 2)
    else:
        r_lo, r_hi = a_lo, a_hi
    if 10 * max(-r_lo, r_hi) > 17 << w:
        # wide or badly reduced: give the trivial bound
        return (-ONE, ONE)
    quadrant = m % 4
    if which == "cos":
        quadrant = (quadrant + 1) % 4
    # sin(x) = [sin r, cos r, -sin r, -cos r][quadrant]
    if quadrant == 0:
        lo, hi = _taylor_sin_fx(r_lo, r_hi, w, bits)
    elif quadrant == 1:
        lo, hi = _taylor_cos_fx(r_lo, r_hi, w, bits)
    elif quadrant == 2:
        t_lo, t_hi = _taylor_sin_fx(r_lo, r_hi, w, bits)
        lo, hi = -t_hi, -t_lo
    else:
        t_lo, t_hi = _taylor_cos_fx(r_lo, r_hi, w, bits)
        lo, hi = -t_hi, -t_lo
    return (Fraction(lo, 1 << w), Fraction(hi, 1 << w))


def _circular_range(which: str, xlo: Fraction, xhi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Range of sin/cos over a wide interval via critical-point analysis."""
    if xhi - xlo >= 7:
        return (-ONE, ONE)
    plo, phi = _pi_bracket(max(bits, 64) + 8 + int(max(abs(xlo), abs(xhi))).bit_length())
    # extrema of sin at pi*(4k+1)/2 (max) and pi*(4k+3)/2 (min); shift for cos
    mid = (xlo + xhi) / 2
    kmid = _approx_ratio_round(mid, 2 * plo)
    has_max = False
    has_min = False
    for k in range(kmid - 3, kmid + 4):
        for num, is_max in (((4 * k + 1), True), ((4 * k + 3), False)):
            if which == "cos":
                num -= 1  # cos extrema at pi*2k (max) and pi*(2k+1) (min)
            c = Fraction(num, 2)
            c_lo = c * (plo if num >= 0 else phi)
            c_hi = c * (phi if num >= 0 else plo)
            if c_hi >= xlo and c_lo <= xhi:
                if is_max:
                    has_max = True
                else:
                    has_min = True
    a = _naive_circular(which, xlo, xlo, bits)
    b = _naive_circular(which, xhi, xhi, bits)
    lo = -ONE if has_min else min(a[0], b[0])
    hi = ONE if has_max else max(a[1], b[1])
    return (max(lo, -ONE), min(hi, ONE))


def _circular(which: str, x: Enclosure, precision: int) -> Enclosure:
    wide = x.width > HALF
    acc_lo, acc_hi = -ONE, ONE
    for b in _ladder(precision):
        if wide:
            lo, hi = _circular_range(which, x.lo, x.hi, b)
        else:
            lo, hi = _naive_circular(which, x.lo, x.hi, b)
        acc_lo = max(acc_lo, lo)
        acc_hi = min(acc_hi, hi)
    return Enclosure(acc_lo, acc_hi)


def sin_enc(x: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    return _circular("sin", _coerce(x), precision)


def cos_enc(x: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    return _circular("cos", _coerce(x), precision)


# ---------------------------------------------------------------------------
# exp
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1 << 10)
def _e_fx(w: int, eb: int) -> tuple[int, int]:
    e_lo, e_hi = _e_bracket(eb)
    return (_fx_floor(e_lo, w), _fx_ceil(e_hi, w))


def _fx_pow_pos(lo: int, hi: int, n: int, w: int) -> tuple[int, int]:
    """(lo, hi)**n for a positive base bracket, rounding outward."""
    r_lo, r_hi = 1 << w, 1 << w
    while n:
        if n & 1:
            r_lo = (r_lo * lo) >> w
            r_hi = -((-r_hi * hi) >> w)
        n >>= 1
        if n:
            lo = (lo * lo) >> w
            hi = -((-hi * hi) >> w)
    return (r_lo, r_hi)


@lru_cache(maxsize=1 << 14)
def _naive_exp(xlo: Fraction, xhi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    w = bits + 32
    a_lo = _fx_floor(xlo, w)
    a_hi = _fx_ceil(xhi, w)
    if a_hi - a_lo > 2 << w:
        # absurdly wide input; exp is monotone, recurse on endpoints
        lo = _naive_exp(xlo, xlo, bits)[0]
        hi = _naive_exp(xhi, xhi, bits)[1]
        return (lo, hi)
    n = ((a_lo + a_hi) // 2) >> w  # floor of the midpoint
    if n > 0:
        # widen the grid to absorb the e**n magnitude, keeping the
        # final width at 2**-bits in absolute terms
        w += (3 * n) // 2 + 2
        a_lo = _fx_floor(xlo, w)
        a_hi = _fx_ceil(xhi, w)
    f_lo, f_hi = a_lo - (n << w), a_hi - (n << w)
    # Taylor at 0 on f in ~[-0.6, 1.6]; tail target is 6 guard bits past
    # bits + extra, which is always 26 bits below the grid
    b_abs = max(-f_lo, f_hi, 0)
    cutoff = 1 << 26
    one_fx = 1 << w
    s_lo, s_hi = one_fx, one_fx
    p_lo, p_hi = one_fx, one_fx
    bound = one_fx
    k = 0
    while True:
        k += 1
        p_lo, p_hi = _fxi_mul(p_lo, p_hi, f_lo, f_hi, w)
        p_lo, p_hi = _fxi_divint(p_lo, p_hi, k)
        s_lo += p_lo
        s_hi += p_hi
        bound = -((-bound * b_abs) >> w)
        bound = -((-bound) // k)
        if 5 * bound <= cutoff and k >= 2:
            break
    tail = 5 * bound  # e**xi <= e**1.7 < 5 on the reduced range
    t_lo, t_hi = max(s_lo - tail, 0), s_hi + tail
    if n != 0:
        eb = (w - 32) + 8 + 2 * abs(n).bit_length()
        q_lo, q_hi = _fx_pow_pos(*_e_fx(w, eb), abs(n), w)
        if n > 0:
            t_lo = (t_lo * q_lo) >> w
            t_hi = -((-t_hi * q_hi) >> w)
        else:
            t_lo = (t_lo << w) // q_hi
            t_hi = -((-t_hi << w) // q_lo)
    return (Fraction(max(t_lo, 0), 1 << w), Fraction(t_hi, 1 << w))


def exp_enc(x: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    x = _coerce(x)
    acc = None
    for b in _ladder(precision):
        lo, hi = _naive_exp(x.lo, x.hi, b)
        acc = (lo, hi) if acc is None else (max(acc[0], lo), min(acc[1], hi))
    return Enclosure(*acc)


# ---------------------------------------------------------------------------
# sqrt
# ---------------------------------------------------------------------------


def _sqrt_bracket(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """[floor, ceil] of sqrt(q) on the (den * 2**bits) grid; exact if possible."""
    if q == 0:
        return (ZERO, ZERO)
    p, d = q.numerator, q.denominator
    scale = d << bits
    n = p * d << (2 * bits)
    s = math.isqrt(n)
    lo = Fraction(s, scale)
    if s * s == n:
        return (lo, lo)
    return (lo, Fraction(s + 1, scale))


def sqrt_enc(x: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    x = _coerce(x)
    if x.lo < 0:
        raise NegativeSqrtDomain(f"enclosure {x} reaches below zero")
    bits = precision + 2
    lo = _sqrt_bracket(x.lo, bits)[0]
    hi = _sqrt_bracket(x.hi, bits)[1]
    return Enclosure(lo, hi)


# ---------------------------------------------------------------------------
# sin(pi * c), cos(pi * c): reduction happens exactly in the rationals
# ---------------------------------------------------------------------------


def sin_pi(c: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    """Enclosure of sin(pi * c).

    The argument is reduced modulo 2 before pi ever enters, so rational
    multiples of pi evaluate exactly: integers give [0, 0], half-integers
    give [1, 1] or [-1, -1].  For interval input the extrema live at
    half-integer points of c, which makes the range analysis an exact
    rational computation.
    """
    if not isinstance(c, Enclosure):
        return _sin_pi_point(as_fraction(c), precision)
    if c.is_point:
        return _sin_pi_point(c.lo, precision)
    if c.width >= 2:
        return Enclosure(-ONE, ONE)
    has_max = False
    has_min = False
    n = -((-2 * c.lo.numerator) // c.lo.denominator)  # ceil(2*lo)
    while Fraction(n, 2) <= c.hi:
        if n % 2:
            if n % 4 == 1:
                has_max = True
            else:
                has_min = True
        n += 1
    a = _sin_pi_point(c.lo, precision)
    b = _sin_pi_point(c.hi, precision)
    lo = -ONE if has_min else min(a.lo, b.lo)
    hi = ONE if has_max else max(a.hi, b.hi)
    return Enclosure(max(lo, -ONE), min(hi, ONE))


def _sin_pi_point(c: Fraction, precision: int) -> Enclosure:
    r = c - 2 * (c.numerator // (2 * c.denominator))  # c mod 2, in [0, 2)
    if r == 0 or r == 1:
        return Enclosure(ZERO, ZERO)
    if r == HALF:
        return Enclosure(ONE, ONE)
    if r == Fraction(3, 2):
        return Enclosure(-ONE, -ONE)
    sign = 1
    if r > 1:
        r = r - 1
        sign = -1
    if r > HALF:
        r = 1 - r
    plo, phi = _pi_bracket(precision + 8)
    lo, hi = _taylor_sin(plo * r, phi * r, precision + 4)
    if sign < 0:
        lo, hi = -hi, -lo
    return Enclosure(max(lo, -ONE), min(hi, ONE))


def cos_pi(c: "Enclosure | RationalLike", precision: int = 64) -> Enclosure:
    if isinstance(c, Enclosure):
        shifted = Enclosure(c.lo + HALF, c.hi + HALF)
    else:
        shifted = as_fraction(c) + HALF
    return sin_pi(shifted, precision)


# ---------------------------------------------------------------------------
# public dispatcher
# ---------------------------------------------------------------------------

_FN_KINDS = ("sin", "cos", "exp", "sqrt", "pi-const")


def enc_transcendental(
    fn_kind: str,
    x: "Enclosure | RationalLike | None" = None,
    precision: int = 64,
) -> Enclosure:
    """Evaluate one of the supported transcendentals as an enclosure.

    fn_kind is one of sin, cos, exp, sqrt, pi-const; pi-const ignores x.
    """
    if fn_kind == "pi-const":
        return pi_const(precision)
    if x is None:
        raise ValueError(f"{fn_kind} needs an argument")
    if fn_kind == "sin":
        return sin_enc(x, precision)
    if fn_kind == "cos":
        return cos_enc(x, precision)
    if fn_kind == "exp":
        return exp_enc(x, precision)
    if fn_kind == "sqrt":
        return sqrt_enc(x, precision)
    raise ValueError(f"unknown transcendental kind {fn_kind!r}; expected one of {_FN_KINDS}")
