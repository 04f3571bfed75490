"""Small exact-arithmetic helpers used by the curve and feasibility code."""
from __future__ import annotations

from fractions import Fraction
from math import floor


def fmt(x) -> str:
    """Render an int or Fraction as ``"p"`` or ``"p/q"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cross(p, q) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def simplest_between(lo, hi) -> Fraction:
    """Rational with the smallest denominator (then numerator) in the open interval (lo, hi).

    ``hi`` may be ``None`` for an unbounded interval.
    """
    lo = Fraction(lo)
    if hi is not None:
        hi = Fraction(hi)
        if not lo < hi:
            raise ValueError(f"empty interval ({lo}, {hi})")
        if lo < 0 < hi:
            return Fraction(0)
        if hi <= 0:
            return -simplest_between(-hi, -lo)
    n = floor(lo)
    if hi is None or n + 1 < hi:
        return Fraction(n + 1)
    # lo and hi share the integer part n (hi may equal n + 1)
    frac_lo = lo - n
    inner_lo = 1 / (hi - n)
    inner_hi = None if frac_lo == 0 else 1 / frac_lo
    return n + 1 / simplest_between(inner_lo, inner_hi)
