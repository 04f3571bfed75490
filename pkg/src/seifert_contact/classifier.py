"""Verdicts for the contact structure compatible with a fibered Seifert multilink.

Indices in witnesses are 0-based here; ``Witness.to_record`` renders them
1-based for display.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional

from .contact_curve import lemma54_condition, lemma54_epsilon, lemma54_feasibility
from .errors import InternalConventionError, NotApplicable, NotS3
from .exact import fmt
from .fibration import (
    ComponentSign,
    SeifertMultilink,
    check_sign_existence,
    component_signs,
    fiber_boundary_slope,
    is_canonical,
    is_fibered,
    normalize_ptp,
    total_weight,
)
from .seifert import seifert


class VerdictKind(enum.Enum):
    STEIN_FILLABLE_TIGHT = "SteinFillableTight"
    TIGHT = "Tight"
    OVERTWISTED = "Overtwisted"
    NOT_FIBERED = "NotFibered"
    UNKNOWN = "Unknown"


class WitnessKind(enum.Enum):
    NON_CANONICAL = "NonCanonical"
    TWO_NEGATIVE = "TwoNegativeComponents"
    LEMMA54 = "Lemma54"
    LEMMA55 = "Lemma55"
    S3_CASE = "S3Case"
    NEGATIVE_HOPF = "NegativeHopfMultilink"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    indices: tuple[int, ...] = ()
    point: Optional[tuple[Fraction, Fraction]] = None
    case_id: Optional[str] = None
    I: Optional[int] = None

    def to_record(self) -> dict:
        rec: dict = {"kind": self.kind.value}
        if self.indices:
            rec["indices"] = [i + 1 for i in self.indices]
        if self.point is not None:
            rec["point"] = [fmt(v) for v in self.point]
        if self.case_id is not None:
            rec["case"] = self.case_id
        if self.I is not None:
            rec["I"] = self.I
        return rec


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Optional[Witness] = None
    trace: tuple[str, ...] = field(default=())
    notes: tuple[str, ...] = field(default=())

    @property
    def is_tight(self) -> bool:
        return self.kind in (VerdictKind.STEIN_FILLABLE_TIGHT, VerdictKind.TIGHT)

    def __str__(self):
        if self.witness is None:
            return self.kind.value
        return f"{self.kind.value}({self.witness.kind.value})"


def _overtwisted(witness: Witness, trace) -> Verdict:
    return Verdict(VerdictKind.OVERTWISTED, witness, tuple(trace))


# keychain links ------------------------------------------------------------


def _classify_keychain(ml: SeifertMultilink, trace: list[str]) -> Verdict:
    """Sigma(..., 0, ...): a centre circle and unknotted rings, a connected sum of Hopf links."""
    data = ml.data
    z = data.zero_index
    trace.append("keychain")
    if z >= ml.n:
        if ml.n == 1:
            return Verdict(VerdictKind.TIGHT, None, tuple(trace), ("trivial knot",))
        return Verdict(VerdictKind.NOT_FIBERED, None, tuple(trace), ("splittable",))
    if any(abs(mi) != 1 for mi in ml.m):
        trace.append("keychain with non-unit multiplicities")
        return Verdict(VerdictKind.UNKNOWN, None, tuple(trace))
    for j in range(ml.n):
        if j == z:
            continue
        lk = ml.m[z] * ml.m[j] * prod(a for l, a in enumerate(data.a) if l not in (z, j))
        if lk < 0:
            return _overtwisted(Witness(WitnessKind.S3_CASE, (z, j), case_id="keychain", I=lk), trace)
    return Verdict(VerdictKind.TIGHT, None, tuple(trace))


# Hopf multilinks -----------------------------------------------------------


def _classify_hopf_reduced(ml: SeifertMultilink, trace: list[str]) -> Verdict:
    """The two fibers link once, so the multilink is that of Sigma(1, 1) up to the sign of lk."""
    trace.append("Hopf reduction to Sigma(1,1)")
    m1, m2 = ml.m
    m2 *= prod(ml.data.a[2:])
    if m1 + m2 == 0:
        return _overtwisted(Witness(WitnessKind.NEGATIVE_HOPF, (0, 1)), trace)
    if m1 * m2 > 0:
        return Verdict(VerdictKind.STEIN_FILLABLE_TIGHT, None, tuple(trace))
    return _overtwisted(Witness(WitnessKind.NON_CANONICAL), trace)


def _hopf_needs_reduction(ml: SeifertMultilink) -> bool:
    a1, a2 = ml.data.a[:2]
    return (abs(a1) == 1 and abs(a2) == 1) or total_weight(ml) == 0


# obstructions with one negative component --------------------------------


def lemma55_triple(ml: SeifertMultilink, i0: int) -> Optional[tuple[int, int, int]]:
    """(i0, i2, i1) with |a_i0| < |a_i2| < |a_i1|, or None."""
    absa = [abs(x) for x in ml.data.a]
    i1 = max(range(len(absa)), key=lambda i: (absa[i], -i))
    for i2 in range(len(absa)):
        if absa[i0] < absa[i2] < absa[i1]:
            return i0, i2, i1
    return None


def lemma54_witness(ml: SeifertMultilink, i0: int) -> Optional[Witness]:
    data = ml.data
    a0 = abs(data.a[i0])
    order = sorted((i for i in range(data.k) if i != i0), key=lambda i: (-abs(data.a[i]), i))
    for i1 in order:
        a1 = abs(data.a[i1])
        if not lemma54_condition(a0, a1, data.A):
            continue
        eps = lemma54_epsilon(data.k, a0, a1, data.A)
        point = lemma54_feasibility(a0, a1, data.A, eps)
        if point is None:
            raise InternalConventionError(f"the size inequality holds but the radius system is empty for {ml}")
        return Witness(WitnessKind.LEMMA54, (i0, i1), point=point)
    return None


# main pipeline -------------------------------------------------------------


def classify(ml: SeifertMultilink) -> Verdict:
    trace: list[str] = []
    trace.append("fiberedness")
    if not is_fibered(ml):
        return Verdict(VerdictKind.NOT_FIBERED, None, tuple(trace))
    if ml.data.A == 0:
        return _classify_keychain(ml, trace)
    if ml.is_hopf() and _hopf_needs_reduction(ml):
        return _classify_hopf_reduced(ml, trace)
    trace.append("PTP normalization")
    ml, _ = normalize_ptp(ml)
    check_sign_existence(ml)
    signs = component_signs(ml)
    if ml.data.A > 0:
        trace.append("canonical test")
        if is_canonical(ml):
            return Verdict(VerdictKind.STEIN_FILLABLE_TIGHT, None, tuple(trace))
        return _overtwisted(Witness(WitnessKind.NON_CANONICAL), trace)
    negatives = [i for i, s in enumerate(signs) if s is ComponentSign.NEGATIVE]
    trace.append("two negative components")
    if len(negatives) >= 2:
        return _overtwisted(Witness(WitnessKind.TWO_NEGATIVE, tuple(negatives[:2])), trace)
    (i0,) = negatives
    trace.append("three fiber sizes")
    triple = lemma55_triple(ml, i0)
    if triple is not None:
        return _overtwisted(Witness(WitnessKind.LEMMA55, triple), trace)
    trace.append("radius system")
    w = lemma54_witness(ml, i0)
    if w is not None:
        return _overtwisted(w, trace)
    if ml.data.is_s3():
        trace.append("S3 classification")
        if all(abs(mi) == 1 for mi in ml.m):
            v = classify_s3(ml)
            return Verdict(v.kind, v.witness, tuple(trace) + v.trace, v.notes)
        trace.append("S3 classification needs a link, not a multilink")
    return Verdict(VerdictKind.UNKNOWN, None, tuple(trace))


# links in S^3 --------------------------------------------------------------


def _s3_normal_form(ml: SeifertMultilink) -> tuple[int, int, int, int]:
    """Pick the two fibers playing p and q in Sigma(1,...,1,p,q).

    Genuine exceptional fibers come first; missing ones are filled with
    |a| = 1 fibers, preferring fibers outside the link.  Returns
    (ip, iq, p, q) where ip is in the link whenever any of the pair is.
    """
    data = ml.data
    chosen = data.exceptional()
    outside = [i for i in range(ml.n, data.k) if i not in chosen]
    inside = [i for i in range(ml.n) if i not in chosen]
    for i in outside + inside:
        if len(chosen) == 2:
            break
        chosen.append(i)
    ip, iq = sorted(chosen, key=lambda i: (i >= ml.n, i))
    return ip, iq, data.a[ip], data.a[iq]


S3_CASES = ("1", "1-exceptional", "1-regular", "2-exceptional", "2-regular", "3")


def s3_intersection(case_id: str, n: int, p: int, q: int) -> int:
    """I(gamma, H) at the measured component of a link in Sigma(1,...,1,p,q), pq < 0.

    In each of the two-sign formulas the upper sign is taken when p > 0.
    Case 1: p is the fiber carrying the measured component.  Case 2: p is the
    exceptional fiber in the link.  Case 3: |p| = 1.
    """
    sgn = 1 if p > 0 else -1
    if case_id in ("1", "1-exceptional"):
        return (n - 2) * p * q - sgn * (p + q)
    if case_id == "1-regular":
        return (n - 4) * p * q - sgn * p + sgn * q
    if case_id == "2-exceptional":
        return (n - 1) * p * q + abs(q)
    if case_id == "2-regular":
        return (n - 3) * p * q - abs(q)
    if case_id == "3":
        return -(n - 3) * abs(q) + p * q
    raise ValueError(f"unknown case {case_id!r}")


def _s3_case(ml: SeifertMultilink, i0: int) -> tuple[str, int, bool]:
    """Case id, literal I(gamma, H) and whether the configuration is impossible for a PTP link."""
    n = ml.n
    ip, iq, p, q = _s3_normal_form(ml)
    in_link = (ip < n) + (iq < n)
    exceptional_negative = i0 in (ip, iq)
    if in_link == 2:
        if exceptional_negative and i0 == iq:
            p, q = q, p
        if n == 2:
            case_id, impossible = "1", False
        elif exceptional_negative:
            case_id, impossible = "1-exceptional", True
        else:
            case_id, impossible = "1-regular", min(abs(p), abs(q)) < 2
    elif in_link == 1:
        if exceptional_negative:
            case_id, impossible = "2-exceptional", True
        else:
            case_id, impossible = "2-regular", not (n == 2 and abs(p) >= 2)
    else:
        if abs(p) != 1 and abs(q) == 1:
            p, q = q, p
        case_id, impossible = "3", n >= 3 and min(abs(p), abs(q)) < 2
    return case_id, s3_intersection(case_id, n, p, q), impossible


def classify_s3(ml: SeifertMultilink) -> Verdict:
    """Complete classification for links (|m_i| = 1) in Sigma(p, q) = S^3."""
    if not ml.data.is_s3():
        raise NotS3(f"{ml.data} has more than two exceptional fibers")
    trace: list[str] = ["fiberedness"]
    if not is_fibered(ml):
        return Verdict(VerdictKind.NOT_FIBERED, None, tuple(trace))
    if ml.data.A == 0:
        return _classify_keychain(ml, trace)
    if ml.is_hopf() and _hopf_needs_reduction(ml):
        return _classify_hopf_reduced(ml, trace)
    ml, _ = normalize_ptp(ml)
    check_sign_existence(ml)
    signs = component_signs(ml)
    if ml.data.A > 0:
        trace.append("canonical test")
        if is_canonical(ml):
            return Verdict(VerdictKind.STEIN_FILLABLE_TIGHT, None, tuple(trace))
        return _overtwisted(Witness(WitnessKind.NON_CANONICAL), trace)
    negatives = [i for i, s in enumerate(signs) if s is ComponentSign.NEGATIVE]
    if len(negatives) >= 2:
        trace.append("two negative components")
        return _overtwisted(Witness(WitnessKind.TWO_NEGATIVE, tuple(negatives[:2])), trace)
    (i0,) = negatives
    data = ml.data
    if ml.n == 1:
        trace.append("knot")
        absp = [abs(a) for i, a in enumerate(data.a) if i != 0]
        if abs(data.a[0]) >= 2 or len([x for x in absp if x >= 2]) < 2:
            return Verdict(VerdictKind.TIGHT, None, tuple(trace), ("trivial knot",))
        I = fiber_boundary_slope(ml).I[0]
        return _overtwisted(Witness(WitnessKind.S3_CASE, (0,), case_id="torus-knot", I=I), trace)
    case_id, I, impossible = _s3_case(ml, i0)
    trace.append(f"case {case_id}")
    if impossible:
        raise InternalConventionError(f"{ml} is PTP in a configuration ruled out by I = {I}")
    outside = prod(abs(a) for a in data.a[ml.n:])
    if ml.n == 2 and outside == 1:
        return Verdict(VerdictKind.TIGHT, None, tuple(trace), ("positive Hopf link",))
    return _overtwisted(Witness(WitnessKind.S3_CASE, (i0,), case_id=case_id, I=I), trace)


# strong quasipositivity ------------------------------------------------------


def is_splittable(ml: SeifertMultilink) -> bool:
    z = ml.data.zero_index
    return z is not None and z >= ml.n and ml.n >= 2


def strongly_quasipositive(ml: SeifertMultilink) -> bool:
    """Strong quasipositivity of a Seifert link in S^3 (all |m_i| = 1)."""
    if any(abs(mi) != 1 for mi in ml.m):
        raise NotApplicable("strong quasipositivity is defined for links, not multilinks")
    if not ml.data.is_s3():
        raise NotS3(f"{ml.data} is not S^3")
    if is_splittable(ml):
        raise NotApplicable(f"{ml} is splittable")
    if is_fibered(ml):
        return classify(ml).is_tight
    # non-fibered Seifert links in S^3 are torus links with half the components reversed
    return ml.data.A < 0


def tb_torus(p: int, q: int) -> int:
    """Maximal Thurston-Bennequin number of the positive (p, q)-torus knot."""
    return p * q - p - q


def annulus_test(p: int, q: int) -> bool:
    """Whether the annulus framing -lk(F') = pq fits under TB; never true."""
    return p * q <= tb_torus(p, q)


def knot_multilink(p: int, q: int) -> SeifertMultilink:
    """The (p, q)-torus knot as a regular fiber of Sigma(1, p, q)."""
    return SeifertMultilink(seifert((1, p, q)), (1,))
