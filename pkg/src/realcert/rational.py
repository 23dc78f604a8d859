"""Exact rational plumbing: parsing, canonical formatting, dyadic rounding.

Every quantity the library certifies is carried as a `fractions.Fraction`
(always in lowest terms, denominator positive).  The wire format for a
rational is the string "p/q" with q >= 1; integers are written "p/1" so
that parsing needs no special cases.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = Fraction | int | str

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)
HALF = Fraction(1, 2)


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected on purpose: a float already rounded away the very
    information an exact certificate is about.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    """Canonical "p/q" form, denominator always explicit."""
    return f"{q.numerator}/{q.denominator}"


def pow2(bits: int) -> Fraction:
    """2**bits as a Fraction, bits may be negative."""
    if bits >= 0:
        return Fraction(1 << bits)
    return Fraction(1, 1 << (-bits))


def dyadic_floor(q: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2**-bits that is <= q."""
    scaled = q * (1 << bits)
    return Fraction(scaled.numerator // scaled.denominator, 1 << bits)


def dyadic_ceil(q: Fraction, bits: int) -> Fraction:
    """Smallest multiple of 2**-bits that is >= q."""
    scaled = q * (1 << bits)
    return Fraction(-((-scaled.numerator) // scaled.denominator), 1 << bits)
