"""Exact integer model of a Seifert fibered homology sphere Sigma(a_1, ..., a_k).

Fibers are addressed by 0-based position in Python code.  Everything here is
integer or :class:`fractions.Fraction` arithmetic; nothing touches floats.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, prod
from typing import Sequence

from .errors import BadZeroPattern, NotCoprime, NotHomologySphere, ValidationError, ZeroDenominator

# Sign convention for lk(S_i, S_j) under working orientations.  +1 is the
# only value for which the boundary-slope identity and all worked examples
# hold (see tests/test_seifert.py::test_linking_sign_calibration).
LINKING_SIGN = 1


def _product_except(values, *skip):
    return prod(v for idx, v in enumerate(values) if idx not in skip)


@dataclass(frozen=True)
class SeifertData:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.a)

    @cached_property
    def A(self) -> int:
        return prod(self.a)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        return tuple(_product_except(self.a, i) for i in range(self.k))

    @cached_property
    def delta(self) -> tuple[int, ...]:
        return tuple(
            sum(self.b[j] * _product_except(self.a, i, j) for j in range(self.k) if j != i)
            for i in range(self.k)
        )

    @property
    def zero_index(self) -> int | None:
        for i, ai in enumerate(self.a):
            if ai == 0:
                return i
        return None

    def exceptional(self) -> list[int]:
        """Indices whose fiber is genuinely exceptional (|a_i| >= 2)."""
        return [i for i, ai in enumerate(self.a) if abs(ai) >= 2]

    def is_s3(self) -> bool:
        """Sigma(a) is S^3 when at most two |a_i| exceed 1 or a zero occurs."""
        return self.zero_index is not None or len(self.exceptional()) <= 2

    def with_b(self, b: Sequence[int]) -> "SeifertData":
        return validate(self.a, b)

    def __str__(self):
        return "Sigma(" + ",".join(map(str, self.a)) + ")"


def _check_a(a: Sequence[int]) -> None:
    if len(a) < 1:
        raise ValidationError("need at least one fiber")
    zeros = [i for i, ai in enumerate(a) if ai == 0]
    if zeros:
        if len(zeros) > 1:
            raise BadZeroPattern(f"more than one zero denominator in {tuple(a)}")
        if any(abs(ai) != 1 for i, ai in enumerate(a) if i != zeros[0]):
            raise BadZeroPattern(f"a zero denominator forces |a_j| = 1 elsewhere: {tuple(a)}")
        return
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if gcd(a[i], a[j]) != 1:
                raise NotCoprime(f"a_{i + 1}={a[i]} and a_{j + 1}={a[j]} share a factor")


def validate(a: Sequence[int], b: Sequence[int]) -> SeifertData:
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if len(a) != len(b):
        raise ValidationError(f"a has {len(a)} entries but b has {len(b)}")
    _check_a(a)
    for i, (ai, bi) in enumerate(zip(a, b)):
        if gcd(ai, bi) != 1:
            raise NotCoprime(f"gcd(|a_{i + 1}|, |b_{i + 1}|) = {gcd(ai, bi)} for ({ai}, {bi})")
    data = SeifertData(a, b)
    total = sum(bi * si for bi, si in zip(b, data.sigma))
    if total != 1:
        raise NotHomologySphere(f"sum b_i sigma_i = {total}, expected 1")
    for ai, bi, si, di in zip(a, b, data.sigma, data.delta):
        # follows algebraically from the checks above
        assert ai * di + bi * si == 1
    return data


def solve_b(a: Sequence[int]) -> tuple[int, ...]:
    """Canonical numerators for the denominators ``a``.

    With all a_i nonzero: b_i is the inverse of sigma_i modulo |a_i| taken in
    [0, |a_i|), and b_1 absorbs the correction making sum b_i sigma_i = 1.
    With a zero at position z: b_z = sigma_z (a unit) and every other b_j = 0.
    """
    a = tuple(int(x) for x in a)
    _check_a(a)
    k = len(a)
    sigma = [_product_except(a, i) for i in range(k)]
    z = next((i for i, ai in enumerate(a) if ai == 0), None)
    if z is not None:
        b = [0] * k
        b[z] = sigma[z]
        return tuple(b)
    b = [pow(sigma[i], -1, abs(a[i])) if abs(a[i]) > 1 else 0 for i in range(k)]
    excess = sum(bi * si for bi, si in zip(b, sigma)) - 1
    A = prod(a)
    t, rem = divmod(excess, A)
    assert rem == 0
    b[0] -= t * a[0]
    return tuple(b)


def seifert(a: Sequence[int], b: Sequence[int] | None = None) -> SeifertData:
    """Build validated data, solving for ``b`` when it is omitted."""
    return validate(a, solve_b(a) if b is None else b)


class Basis(enum.Enum):
    MERIDIAN_LONGITUDE = "ML"
    SECTION_FIBER = "QH"


@dataclass(frozen=True)
class CurveClass:
    """x*M_i + y*L_i (meridian-longitude) or x*Q_i + y*H (section-fiber)."""

    x: int
    y: int
    basis: Basis
    index: int


def basis_change(c: CurveClass, data: SeifertData) -> CurveClass:
    i = c.index
    if not 0 <= i < data.k:
        raise IndexError(f"fiber index {i} out of range for k={data.k}")
    a, b, s, d = data.a[i], data.b[i], data.sigma[i], data.delta[i]
    if c.basis is Basis.MERIDIAN_LONGITUDE:
        # M = a Q + b H,  L = -s Q + d H
        return CurveClass(c.x * a - c.y * s, c.x * b + c.y * d, Basis.SECTION_FIBER, i)
    # Q = d M - b L,  H = s M + a L
    return CurveClass(c.x * d + c.y * s, -c.x * b + c.y * a, Basis.MERIDIAN_LONGITUDE, i)


def fiber_linking(data: SeifertData, i: int, j: int) -> int:
    """lk(S_i, S_j) as the product of the remaining denominators.

    Agrees with A/(a_i a_j) when A != 0 and stays defined for the keychain
    pattern with a zero denominator.
    """
    if i == j:
        raise ValueError("linking number needs two distinct fibers")
    return LINKING_SIGN * _product_except(data.a, i, j)


def linking_number(data: SeifertData, i: int, j: int) -> int:
    if data.A == 0:
        raise ZeroDenominator(f"{data} has a zero denominator")
    return fiber_linking(data, i, j)


def euler_number(data: SeifertData) -> Fraction:
    if data.A == 0:
        raise ZeroDenominator(f"{data} has a zero denominator")
    return sum((Fraction(-bi, ai) for ai, bi in zip(data.a, data.b)), Fraction(0))
