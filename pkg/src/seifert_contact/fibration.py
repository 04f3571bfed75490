"""Seifert multilinks: fiberedness, fiber-surface boundary slopes, PTP and signs."""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import (
    DegenerateHopf,
    InternalConventionError,
    MixedSignsInternal,
    ValidationError,
    ZeroDenominator,
)
from .seifert import SeifertData, fiber_linking, linking_number, seifert


@dataclass(frozen=True)
class SeifertMultilink:
    """Multiplicities m_1..m_n placed on the first n fibers of ``data``."""

    data: SeifertData
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if not 1 <= len(self.m) <= self.data.k:
            raise ValidationError(f"need 1 <= n <= k, got n={len(self.m)}, k={self.data.k}")
        if any(mi == 0 for mi in self.m):
            raise ValidationError("multiplicities must be nonzero")

    @property
    def n(self) -> int:
        return len(self.m)

    def flipped(self) -> "SeifertMultilink":
        return replace(self, m=tuple(-mi for mi in self.m))

    def is_hopf(self) -> bool:
        """Two link components and no exceptional fiber outside the link.

        The two fibers are then the cores of a genus-one splitting of S^3,
        i.e. a Hopf link (with multiplicities).
        """
        return self.n == 2 and all(abs(x) == 1 for x in self.data.a[2:])

    def __str__(self):
        return f"({self.data}, m={list(self.m)})"


def multilink(a: Sequence[int], m: Sequence[int], b: Sequence[int] | None = None) -> SeifertMultilink:
    return SeifertMultilink(seifert(a, b), tuple(m))


class ComponentSign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


def _require_nonzero_A(ml: SeifertMultilink) -> None:
    if ml.data.A == 0:
        raise ZeroDenominator(f"{ml.data} has a zero denominator")


def lambda_at_fiber(ml: SeifertMultilink, i: int) -> int:
    """Total linking sum_{j<n, j != i} m_j lk(S_i, S_j)."""
    _require_nonzero_A(ml)
    return sum(ml.m[j] * linking_number(ml.data, i, j) for j in range(ml.n) if j != i)


def total_weight(ml: SeifertMultilink) -> Fraction:
    """sum_j m_j / a_j.  A regular fiber links the multilink A times this."""
    _require_nonzero_A(ml)
    return sum((Fraction(mj, aj) for mj, aj in zip(ml.m, ml.data.a)), Fraction(0))


def is_fibered(ml: SeifertMultilink) -> bool:
    data = ml.data
    z = data.zero_index
    if z is not None:
        # keychain: a centre circle with unlinked rings around it
        return z < ml.n or ml.n == 1
    if ml.is_hopf():
        return True
    if any(lambda_at_fiber(ml, i) == 0 for i in range(ml.n, data.k)):
        return False
    # a regular fiber outside the link must link it nontrivially too
    return total_weight(ml) != 0


def _primitive(x: int, y: int) -> tuple[int, int]:
    g = gcd(x, y)
    return x // g, y // g


@dataclass(frozen=True)
class SlopeData:
    """Per link component: total linking, boundary class u*M + v*L, and I = u a - v sigma."""

    lam: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]
    I: tuple[int, ...]

    def identity_residual(self, data: SeifertData) -> Fraction:
        """1/A + sum v_i / (a_i I_i); zero for every genuine fiber surface."""
        return Fraction(1, data.A) + sum(
            (Fraction(vi, ai * Ii) for vi, ai, Ii in zip(self.v, data.a, self.I)), Fraction(0)
        )


def fiber_boundary_slope(ml: SeifertMultilink) -> SlopeData:
    _require_nonzero_A(ml)
    data = ml.data
    lam, us, vs, Is = [], [], [], []
    for i in range(ml.n):
        li = lambda_at_fiber(ml, i)
        u, v = _primitive(li, -ml.m[i])
        lam.append(li)
        us.append(u)
        vs.append(v)
        Is.append(u * data.a[i] - v * data.sigma[i])
    if any(I == 0 for I in Is):
        raise DegenerateHopf(f"{ml}: fiber surface is not transverse to the Seifert fibers")
    if len({I > 0 for I in Is}) > 1:
        raise MixedSignsInternal(f"{ml}: intersection numbers {Is} have mixed signs")
    return SlopeData(tuple(lam), tuple(us), tuple(vs), tuple(Is))


def normalize_ptp(ml: SeifertMultilink) -> tuple[SeifertMultilink, bool]:
    """Return the member of {L(m), L(-m)} with positive transverse property."""
    slopes = fiber_boundary_slope(ml)
    if slopes.I[0] > 0:
        return ml, False
    return ml.flipped(), True


def component_signs(ml: SeifertMultilink) -> list[ComponentSign]:
    _require_nonzero_A(ml)
    return [
        ComponentSign.POSITIVE if mi * ai > 0 else ComponentSign.NEGATIVE
        for mi, ai in zip(ml.m, ml.data.a)
    ]


def is_canonical(ml: SeifertMultilink) -> bool:
    return len(set(component_signs(ml))) == 1


def check_sign_existence(ml: SeifertMultilink) -> None:
    """A > 0 forces a positive component after PTP, A < 0 a negative one."""
    signs = component_signs(ml)
    wanted = ComponentSign.POSITIVE if ml.data.A > 0 else ComponentSign.NEGATIVE
    if wanted not in signs:
        raise InternalConventionError(f"{ml} is PTP but has no {wanted.name.lower()} component")
