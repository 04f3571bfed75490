"""Cabling a fibered multilink along a solid torus and propagating tightness.

The cable has slope q M + p L on the boundary of the solid torus N, and the
fiber surface of the retracted multilink meets that boundary in
gamma = u M + v L.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import gcd
from typing import Sequence

from .classifier import Verdict, VerdictKind
from .errors import Degenerate, NotApplicable, QZero, ValidationError
from .fibration import SeifertMultilink
from .seifert import seifert


class ParentState(enum.Enum):
    TIGHT = "tight"
    OVERTWISTED = "overtwisted"


def parent_state(v) -> ParentState:
    """Collapse a verdict (or its kind) to tight/overtwisted."""
    if isinstance(v, ParentState):
        return v
    kind = v.kind if isinstance(v, Verdict) else v
    if kind in (VerdictKind.STEIN_FILLABLE_TIGHT, VerdictKind.TIGHT):
        return ParentState.TIGHT
    if kind is VerdictKind.OVERTWISTED:
        return ParentState.OVERTWISTED
    raise NotApplicable(f"parent verdict {kind.value} carries no tightness information")


@dataclass(frozen=True)
class CablingSpec:
    p: int
    q: int
    u: int
    v: int
    cable_components: int = 1
    parent: ParentState = ParentState.TIGHT

    def __post_init__(self):
        if self.p < 1:
            raise ValidationError("p must be positive")
        if self.v < 1:
            raise ValidationError("v must be positive")
        if gcd(self.u, self.v) != 1:
            raise ValidationError(f"gamma = ({self.u}, {self.v}) is not primitive")
        if self.cable_components < 1:
            raise ValidationError("need at least one cable component")
        object.__setattr__(self, "parent", parent_state(self.parent))


def knot_parent(p: int, q: int, parent=ParentState.TIGHT) -> CablingSpec:
    """(p, q)-cable of a fibered knot: gamma is the fiber-surface longitude."""
    if q == 0:
        raise QZero("q = 0 is excluded")
    return CablingSpec(p, q, 0, 1, gcd(p, abs(q)), parent)


def normalize_basis(spec: CablingSpec) -> CablingSpec:
    """Re-base L -> L + tM so that u >= 0 is minimal and q != 0."""
    t = spec.u // spec.v
    if spec.q - t * spec.p == 0:
        t -= 1
    u, q = spec.u - t * spec.v, spec.q - t * spec.p
    if q == 0:
        raise QZero(f"every representative of {spec} has q = 0")
    return replace(spec, u=u, q=q)


@dataclass(frozen=True)
class CablingSign:
    eps: int
    eps_n: int

    @property
    def positive(self) -> bool:
        return self.eps == 1


def cabling_sign(spec: CablingSpec) -> CablingSign:
    """eps = sign of I(H, gamma) = qv - pu."""
    det = spec.q * spec.v - spec.p * spec.u
    if det == 0:
        raise Degenerate(f"cable slope is parallel to the fiber-surface slope in {spec}")
    eps = 1 if det > 0 else -1
    eps_n = -1 if eps == -1 and spec.q > 0 else 1
    return CablingSign(eps, eps_n)


def seifert_model(spec: CablingSpec, sign: CablingSign, m: Sequence[int]) -> SeifertMultilink:
    """Sigma(1, ..., 1, eps q, eps p) carrying the cable strands and the core.

    ``m`` lists the n - 1 strand multiplicities followed by the core
    multiplicity m_n; m_n = 0 drops the core from the link.
    """
    *strands, m_n = (int(x) for x in m)
    if not strands or any(x == 0 for x in strands):
        raise ValidationError("need at least one nonzero strand multiplicity")
    d = gcd(spec.p, abs(spec.q))
    p, q = spec.p // d, spec.q // d
    a = [1] * len(strands) + [sign.eps * q, sign.eps * p]
    mult = [sign.eps * abs(x) for x in strands]
    if m_n != 0:
        mult.append(sign.eps_n * m_n)
    return SeifertMultilink(seifert(a), tuple(mult))


EXTERNAL_NOTE = (
    "known externally: for a tight parent, p >= 2 and q = -1 the result is tight "
    "iff the ambient manifold is S^3 and the cable is a trivial knot"
)


def classify_cabling(spec: CablingSpec) -> Verdict:
    spec = normalize_basis(spec)
    sign = cabling_sign(spec)
    trace = [f"eps={sign.eps}", f"eps_n={sign.eps_n}"]
    if spec.parent is ParentState.OVERTWISTED:
        return Verdict(VerdictKind.OVERTWISTED, None, tuple(trace + ["overtwisted parent"]))
    if sign.positive:
        return Verdict(VerdictKind.TIGHT, None, tuple(trace + ["positive cabling"]))
    if spec.cable_components >= 2:
        return Verdict(VerdictKind.OVERTWISTED, None, tuple(trace + ["negative, disconnected"]))
    if spec.p == 1:
        # a (1, q)-cable is isotopic to the core
        return Verdict(VerdictKind.TIGHT, None, tuple(trace + ["p = 1"]))
    if spec.q <= -2:
        return Verdict(VerdictKind.OVERTWISTED, None, tuple(trace + ["negative, p >= 2, q <= -2"]))
    trace.append(f"negative, connected, p >= 2, q = {spec.q}")
    notes = (EXTERNAL_NOTE,) if spec.q == -1 else ("not covered by the cabling theorem",)
    return Verdict(VerdictKind.UNKNOWN, None, tuple(trace), notes)
