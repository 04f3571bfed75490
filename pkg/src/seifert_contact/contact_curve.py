"""Exact plane curves (h1(r), h2(r)) encoding contact forms h1 dmu + h2 dlambda on solid tori.

A curve is a chain of pieces over r in [0, 1].  The first piece is the
start normal form (-c, r^2) or its pi-rotation (c, -r^2); later pieces are
straight segments or circular arcs about the origin with rational
parametrisation, so every value below is an exact ``Fraction``.

The form is contact iff h1'h2 - h1h2' > 0, i.e. the curve winds clockwise.
A crossing of the x-axis at r > 0 gives a meridian disk with Legendrian
boundary, so it certifies a Lutz tube.  Curves are stored in absolute
coordinates; crossings are reported in the frame rotated by the start sign,
where they sit on the positive x-axis.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import (
    ContactViolation,
    Infeasible,
    MalformedCurve,
    QuadrantMismatch,
    ZeroDenominator,
)
from .exact import cross, fmt, simplest_between
from .fibration import (
    ComponentSign,
    SeifertMultilink,
    check_sign_existence,
    component_signs,
    is_fibered,
    normalize_ptp,
)
from .seifert import SeifertData

DEFAULT_SAMPLES = 1024

Point = tuple[Fraction, Fraction]


def _pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class StartPiece:
    """(-sign*c, sign*r^2) for r in [0, r1]."""

    c: Fraction
    sign: int
    r1: Fraction
    r0: Fraction = Fraction(0)

    def point(self, r) -> Point:
        return (-self.sign * self.c, self.sign * r * r)

    def deriv(self, r) -> Point:
        return (Fraction(0), 2 * self.sign * r)

    def tangent_in(self) -> Point:
        return (Fraction(0), Fraction(self.sign))

    tangent_out = tangent_in


@dataclass(frozen=True)
class Segment:
    p0: Point
    p1: Point
    r0: Fraction
    r1: Fraction

    def _t(self, r):
        return (r - self.r0) / (self.r1 - self.r0)

    def point(self, r) -> Point:
        t = self._t(r)
        return (self.p0[0] + t * (self.p1[0] - self.p0[0]), self.p0[1] + t * (self.p1[1] - self.p0[1]))

    def deriv(self, r) -> Point:
        span = self.r1 - self.r0
        return ((self.p1[0] - self.p0[0]) / span, (self.p1[1] - self.p0[1]) / span)

    def tangent_in(self) -> Point:
        return (self.p1[0] - self.p0[0], self.p1[1] - self.p0[1])

    tangent_out = tangent_in


@dataclass(frozen=True)
class CircleArc:
    """Arc of the circle of radius rho about the origin.

    Uses t = tan(theta/2) moving linearly from t0 to t1; t decreasing is clockwise.
    """

    rho: Fraction
    t0: Fraction
    t1: Fraction
    r0: Fraction
    r1: Fraction

    def _t(self, r):
        return self.t0 + (r - self.r0) / (self.r1 - self.r0) * (self.t1 - self.t0)

    def point(self, r) -> Point:
        t = self._t(r)
        d = 1 + t * t
        return (self.rho * (1 - t * t) / d, self.rho * 2 * t / d)

    def deriv(self, r) -> Point:
        t = self._t(r)
        d = (1 + t * t) ** 2
        dt = (self.t1 - self.t0) / (self.r1 - self.r0)
        return (self.rho * -4 * t / d * dt, self.rho * 2 * (1 - t * t) / d * dt)

    def tangent_in(self) -> Point:
        return self.deriv(self.r0)

    def tangent_out(self) -> Point:
        return self.deriv(self.r1)


Piece = StartPiece | Segment | CircleArc


@dataclass(frozen=True)
class PlaneCurve:
    pieces: tuple[Piece, ...]

    @property
    def start_sign(self) -> int:
        first = self.pieces[0]
        return first.sign if _is_start(first) else 1

    @property
    def start_c(self) -> Optional[Fraction]:
        first = self.pieces[0]
        return first.c if _is_start(first) else None

    def piece_at(self, r) -> Piece:
        r = Fraction(r)
        for p in self.pieces:
            if p.r0 <= r <= p.r1:
                return p
        raise ValueError(f"r={r} outside [0, 1]")

    def point(self, r) -> Point:
        return self.piece_at(r).point(Fraction(r))

    def deriv(self, r) -> Point:
        return self.piece_at(r).deriv(Fraction(r))

    def endpoint(self) -> Point:
        last = self.pieces[-1]
        return last.point(last.r1)

    def scaled(self, t) -> "PlaneCurve":
        """Uniform scaling by t > 0."""
        t = Fraction(t)
        out = []
        for p in self.pieces:
            if isinstance(p, StartPiece):
                out.append(_ScaledStart(p, t))
            elif isinstance(p, Segment):
                out.append(Segment(_scale(p.p0, t), _scale(p.p1, t), p.r0, p.r1))
            else:
                out.append(CircleArc(p.rho * t, p.t0, p.t1, p.r0, p.r1))
        return PlaneCurve(tuple(out))

    def sample_points(self, per_piece: int = 32) -> list[tuple[float, float]]:
        pts = []
        for p in self.pieces:
            for j in range(per_piece + 1):
                x, y = p.point(p.r0 + (p.r1 - p.r0) * Fraction(j, per_piece))
                pts.append((float(x), float(y)))
        return pts

    def to_record(self) -> dict:
        """JSON-friendly description with rationals as strings."""
        rec = []
        for p in self.pieces:
            if _is_start(p):
                rec.append({"kind": "start", "c": fmt(p.c), "sign": p.sign, "r": [fmt(p.r0), fmt(p.r1)]})
            elif isinstance(p, Segment):
                rec.append(
                    {
                        "kind": "segment",
                        "from": [fmt(v) for v in p.p0],
                        "to": [fmt(v) for v in p.p1],
                        "r": [fmt(p.r0), fmt(p.r1)],
                    }
                )
            else:
                rec.append(
                    {
                        "kind": "arc",
                        "rho": fmt(p.rho),
                        "t": [fmt(p.t0), fmt(p.t1)],
                        "r": [fmt(p.r0), fmt(p.r1)],
                    }
                )
        return {"pieces": rec}


def _scale(p: Point, t) -> Point:
    return (p[0] * t, p[1] * t)


@dataclass(frozen=True)
class _ScaledStart:
    # a start piece multiplied by a constant; only used by PlaneCurve.scaled
    base: StartPiece
    t: Fraction

    @property
    def r0(self):
        return self.base.r0

    @property
    def r1(self):
        return self.base.r1

    @property
    def sign(self):
        return self.base.sign

    @property
    def c(self):
        return self.base.c * self.t

    def point(self, r):
        return _scale(self.base.point(r), self.t)

    def deriv(self, r):
        return _scale(self.base.deriv(r), self.t)

    def tangent_in(self):
        return self.base.tangent_in()

    tangent_out = tangent_in


def _is_start(piece) -> bool:
    return isinstance(piece, (StartPiece, _ScaledStart))


def contact_value(piece, r) -> Fraction:
    """h1'h2 - h1h2' at parameter r."""
    h = piece.point(r)
    d = piece.deriv(r)
    return d[0] * h[1] - h[0] * d[1]


def _check_well_formed(curve: PlaneCurve) -> None:
    if not curve.pieces:
        raise MalformedCurve("curve has no pieces")
    if curve.pieces[0].r0 != 0 or curve.pieces[-1].r1 != 1:
        raise MalformedCurve("pieces must cover r in [0, 1]")
    for i, p in enumerate(curve.pieces):
        if not p.r0 < p.r1:
            raise MalformedCurve(f"piece {i} has an empty parameter interval")
        if i and _is_start(p):
            raise MalformedCurve("a start piece may only come first")
    for p, q in zip(curve.pieces, curve.pieces[1:]):
        if p.r1 != q.r0:
            raise MalformedCurve(f"parameter gap between {p.r1} and {q.r0}")
        if p.point(p.r1) != q.point(q.r0):
            raise MalformedCurve(f"curve is discontinuous at r={p.r1}")


def _sample_values(piece, samples: int) -> Iterator[Fraction]:
    step = (piece.r1 - piece.r0) / samples
    start = 1 if _is_start(piece) and piece.r0 == 0 else 0
    for j in range(start, samples + 1):
        yield contact_value(piece, piece.r0 + j * step)


def verify_contact(curve: PlaneCurve, samples: int = DEFAULT_SAMPLES) -> bool:
    if samples < 100:
        raise MalformedCurve("need at least 100 samples per piece")
    _check_well_formed(curve)
    for piece in curve.pieces:
        if isinstance(piece, Segment):
            # the contact value is affine in r along a segment
            v0, v1 = contact_value(piece, piece.r0), contact_value(piece, piece.r1)
            if any(v0 * (samples - j) + v1 * j <= 0 for j in range(samples + 1)):
                return False
        elif any(v <= 0 for v in _sample_values(piece, samples)):
            return False
    return True


def turning_sequence(curve: PlaneCurve) -> list[Fraction]:
    """Cross products of consecutive tangent directions at the piece junctions."""
    out = []
    for p, q in zip(curve.pieces, curve.pieces[1:]):
        out.append(cross(p.tangent_out(), q.tangent_in()))
    return out


def is_monotone_turning(curve: PlaneCurve) -> bool:
    turns = turning_sequence(curve)
    for p, q in zip(curve.pieces, curve.pieces[1:]):
        u, v = p.tangent_out(), q.tangent_in()
        if cross(u, v) == 0 and u[0] * v[0] + u[1] * v[1] < 0:
            return False  # a reversal is not a rotation
    return all(t <= 0 for t in turns) or all(t >= 0 for t in turns)


def reeb_direction(curve: PlaneCurve, r) -> Point:
    """(h1', h2') / (h1'h2 - h1h2'), the (d/dmu, d/dlambda) components of the Reeb field."""
    r = Fraction(r)
    piece = curve.piece_at(r)
    if r == 0 and _is_start(piece):
        # limit of (0, 2 s r) / (2 c r)
        return (Fraction(0), Fraction(piece.sign) / piece.c)
    d = piece.deriv(r)
    D = contact_value(piece, r)
    if D <= 0:
        raise ContactViolation(f"h1'h2 - h1h2' = {D} at r={r}")
    return (d[0] / D, d[1] / D)


# radii ---------------------------------------------------------------------


class RadiiMode(enum.Enum):
    LEMMA42 = "Lemma42"
    LEMMA53 = "Lemma53"


@dataclass(frozen=True)
class RadiiSelection:
    R: tuple[Fraction, ...]
    mode: RadiiMode
    i0: Optional[int] = None
    # open windows (lo, hi); None stands for an infinite end
    windows: tuple[tuple[Optional[Fraction], Optional[Fraction]], ...] = ()

    def satisfied(self) -> bool:
        inside = all(
            (lo is None or lo < r) and (hi is None or r < hi) for r, (lo, hi) in zip(self.R, self.windows)
        )
        return inside and sum(self.R) < 0


def radii_windows(data: SeifertData, mode: RadiiMode, i0: Optional[int] = None):
    if data.A == 0:
        raise ZeroDenominator(f"{data} has a zero denominator")
    if mode is RadiiMode.LEMMA42 and data.A < 0:
        raise Infeasible("Lemma42 radii need A > 0")
    if mode is RadiiMode.LEMMA53 and (data.A > 0 or i0 is None):
        raise Infeasible("Lemma53 radii need A < 0 and an index i0")
    windows = []
    for i, (a, b) in enumerate(zip(data.a, data.b)):
        ba = Fraction(b, a)
        if mode is RadiiMode.LEMMA53 and i == i0:
            hi = -ba + Fraction(1, data.A)
            windows.append((Fraction(0) if hi > 0 else None, hi))
        else:
            windows.append((-ba, Fraction(0) if ba > 0 else None))
    return tuple(windows)


def select_radii(data: SeifertData, mode: RadiiMode, i0: Optional[int] = None) -> RadiiSelection:
    """Deterministic radii in the open windows with negative sum.

    The lower ends of the windows sum to -1/|A| < 0, leaving a budget
    B = 1/|A| that is spread evenly: each radius sits min(B/(k+1), width/2)
    above its lower end.  A window unbounded below is pushed down last.
    """
    windows = radii_windows(data, mode, i0)
    k = data.k
    R: list[Optional[Fraction]] = [None] * k
    open_low = [i for i, (lo, _) in enumerate(windows) if lo is None]

    def width(i):
        lo, hi = windows[i]
        return None if hi is None else hi - lo

    if open_low:
        (j,) = open_low
        for i in range(k):
            if i != j:
                w = width(i)
                R[i] = windows[i][0] + (Fraction(1, 2) if w is None else min(Fraction(1, 2), w / 2))
        rest = sum(R[i] for i in range(k) if i != j)
        R[j] = min(windows[j][1] - 1, -rest - 1)
    else:
        budget = -sum(lo for lo, _ in windows)
        if budget <= 0:
            raise Infeasible(f"window lower ends sum to {-budget} >= 0")
        share = budget / (k + 1)
        for i in range(k):
            w = width(i)
            R[i] = windows[i][0] + (share if w is None else min(share, w / 2))
    sel = RadiiSelection(tuple(R), mode, i0, windows)
    if not sel.satisfied():
        raise Infeasible(f"radii {sel.R} miss their windows for {data}")
    return sel


# tubes ---------------------------------------------------------------------


class TubeKind(enum.Enum):
    EXTENSION1 = "Extension1"
    EXTENSION2 = "Extension2"
    OPEN_BOOK = "OpenBook"


@dataclass(frozen=True)
class TubeForm:
    index: int
    kind: TubeKind
    R: Fraction
    endpoint: Point
    tangent: Point
    curve: PlaneCurve
    lutz_crossings: tuple[Fraction, ...] = field(default=())


def _choose_c(lo, hi) -> Fraction:
    # c = 1 when it fits, otherwise something strictly inside (lo, hi)
    if lo < 1 and (hi is None or 1 < hi):
        return Fraction(1)
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _connect(P: Point, T: Point) -> tuple[Fraction, list[Point]]:
    """Clockwise route from (-c, 0) heading up to P arriving along T (normalized frame).

    Returns c and the vertices after the start.  Requires cross(P, T) < 0.
    """
    x, y = P
    Tx, Ty = T
    if cross(P, T) >= 0:
        raise ContactViolation(f"boundary data {P}, {T} is not clockwise")
    if y > 0 and Ty >= 0:
        if Tx == 0:
            return -x, [P]
        if Tx > 0:
            c = _choose_c(max(Fraction(0), -x), None if Ty == 0 else 1 / Ty)
        else:
            c = _choose_c(1 / Ty, -x)
        u = (x + c) / Tx
        return c, [(-c, y - u * Ty), P]
    if Ty < 0:
        h = max(y, Fraction(0)) + 1
        u = (h - y) / -Ty
        x3 = x - u * Tx
        c = max(Fraction(1), -x3 + 1)
        return c, [(-c, h), (x3, h), P]
    raise QuadrantMismatch(f"endpoint {P} with tangent {T} is unreachable by a monotone clockwise curve")


def _assemble(P: Point, T: Point, s0: int) -> PlaneCurve:
    Pn = (s0 * P[0], s0 * P[1])
    Tn = (s0 * T[0], s0 * T[1])
    c, verts = _connect(Pn, Tn)
    h_first = verts[0][1]
    r1 = Fraction(1, 4)
    while r1 * r1 >= h_first:
        r1 /= 2
    chain = [(-c, r1 * r1)] + [v for v in verts]
    if chain[1] == chain[0]:
        chain.pop(0)
    nseg = len(chain) - 1
    pieces: list = [StartPiece(c, s0, r1)]
    rs = [r1 + (1 - r1) * Fraction(j, nseg) for j in range(nseg + 1)]
    for j in range(nseg):
        p0 = (s0 * chain[j][0], s0 * chain[j][1])
        p1 = (s0 * chain[j + 1][0], s0 * chain[j + 1][1])
        pieces.append(Segment(p0, p1, rs[j], rs[j + 1]))
    return PlaneCurve(tuple(pieces))


def build_tube(data: SeifertData, i: int, R, kind: TubeKind) -> TubeForm:
    """Solid-torus form for fiber i matching (b + aRr) dmu + (delta - sigma Rr) dlambda near r = 1."""
    a, b = data.a[i], data.b[i]
    if a == 0:
        raise ZeroDenominator(f"fiber {i + 1} has a zero denominator")
    R = Fraction(R)
    P = _pt(data.sigma[i] * R - data.delta[i], b + a * R)
    T = _pt(data.sigma[i], a)
    sa = 1 if a > 0 else -1
    s0 = sa if kind is TubeKind.EXTENSION1 else -sa
    curve = _assemble(P, T, s0)
    return TubeForm(i, kind, R, P, T, curve, tuple(lutz_crossings(curve)))


def open_book_tube(u: int, v: int, R) -> TubeForm:
    """Binding tube gluing to R(v dmu - u dlambda) + dlambda/r with speed (1, 0) at r = 1."""
    R = Fraction(R)
    P = _pt(R * u - 1, R * v)
    T = _pt(1, 0)
    curve = _assemble(P, T, 1)
    return TubeForm(-1, TubeKind.OPEN_BOOK, R, P, T, curve, tuple(lutz_crossings(curve)))


def lutz_crossings(curve: PlaneCurve) -> list[Fraction]:
    """Parameters r > 0 where the curve meets the positive x-axis of the start-sign frame."""
    s0 = curve.start_sign
    found: set[Fraction] = set()
    for p in curve.pieces:
        if isinstance(p, Segment):
            x0, y0 = s0 * p.p0[0], s0 * p.p0[1]
            x1, y1 = s0 * p.p1[0], s0 * p.p1[1]
            if y0 == y1:
                continue
            t = y0 / (y0 - y1)
            if 0 <= t <= 1 and x0 + t * (x1 - x0) > 0:
                found.add(p.r0 + t * (p.r1 - p.r0))
        elif isinstance(p, CircleArc):
            # (s0 * rho, 0) sits at t = 0 when s0 = 1 and rho > 0
            target_t = 0 if s0 * p.rho > 0 else None
            if target_t is not None and min(p.t0, p.t1) <= 0 <= max(p.t0, p.t1):
                found.add(p.r0 + (0 - p.t0) / (p.t1 - p.t0) * (p.r1 - p.r0))
    return sorted(r for r in found if r > 0)


def detect_lutz(tube: TubeForm) -> list[Fraction]:
    return lutz_crossings(tube.curve)


# the two-fiber radius region --------------------------------------------------


def lemma54_condition(a0: int, a1: int, A: int) -> bool:
    """(1/|a1|)(1/|a0| - 1/|a1|) > -1/A."""
    return Fraction(1, a1) * (Fraction(1, a0) - Fraction(1, a1)) > Fraction(-1, A)


def lemma54_system_holds(a0: int, a1: int, A: int, eps, X, Y) -> bool:
    inv_A = Fraction(1, A)
    return (
        a0 * X + a1 * Y == 0
        and X + Y < -eps + inv_A
        and Fraction(-1, a0 * a0) < X < inv_A
        and 0 < Y < Fraction(1, a1 * a1)
    )


def lemma54_epsilon(k: int, a0: int, a1: int, A: int) -> Fraction:
    """0 for two fibers; otherwise at most half the room left by the closed-form inequality."""
    if k == 2:
        return Fraction(0)
    gap = Fraction(1, a1) * (Fraction(1, a0) - Fraction(1, a1)) + Fraction(1, A)
    if gap <= 0:
        return Fraction(0)
    return min(Fraction(1, 2 * abs(A)), gap / 2)


def lemma54_feasibility(a0: int, a1: int, A: int, eps=Fraction(0)) -> Optional[tuple[Fraction, Fraction]]:
    """Exact witness (X, Y) of the two-fiber radius system or None.

    On the line X = -(a1/a0) Y every constraint is a strict bound on Y; the
    witness takes the simplest rational Y in the resulting open interval.
    """
    if a0 <= 0 or a1 <= 0 or A >= 0:
        raise ValueError("need positive |a_i0|, |a_i1| and negative A")
    eps = Fraction(eps)
    ratio = Fraction(a1, a0)
    inv_A = Fraction(1, A)
    lo, hi = Fraction(0), Fraction(1, a1 * a1)
    hi = min(hi, Fraction(1, a0 * a1))  # X > -1/a0^2
    lo = max(lo, -inv_A / ratio)  # X < 1/A
    coeff = 1 - ratio  # X + Y = coeff * Y
    bound = inv_A - eps
    if coeff > 0:
        hi = min(hi, bound / coeff)
    elif coeff < 0:
        lo = max(lo, bound / coeff)
    elif bound <= 0:
        return None
    if not lo < hi:
        return None
    Y = simplest_between(lo, hi)
    X = -ratio * Y
    assert lemma54_system_holds(a0, a1, A, eps, X, Y)
    return X, Y


# full construction -----------------------------------------------------------


@dataclass(frozen=True)
class FullForm:
    multilink: SeifertMultilink
    radii: RadiiSelection
    tubes: tuple[TubeForm, ...]
    census: frozenset[int]
    i0: Optional[int] = None


def build_full_form(ml: SeifertMultilink) -> FullForm:
    """One tube per fiber for the PTP representative of ``ml``.

    Negative components get Extension2, all others Extension1.  Under the
    Lemma53 radii the component i0 lies below -b/a, so its Extension2 tube
    carries no Lutz crossing.
    """
    if ml.data.A == 0:
        raise ZeroDenominator(f"{ml.data} has a zero denominator")
    if not is_fibered(ml):
        raise Infeasible(f"{ml} is not fibered")
    ml, _ = normalize_ptp(ml)
    check_sign_existence(ml)
    signs = component_signs(ml)
    data = ml.data
    i0 = None
    if data.A > 0:
        radii = select_radii(data, RadiiMode.LEMMA42)
    else:
        i0 = signs.index(ComponentSign.NEGATIVE)
        radii = select_radii(data, RadiiMode.LEMMA53, i0)
    tubes = []
    for i in range(data.k):
        negative = i < ml.n and signs[i] is ComponentSign.NEGATIVE
        kind = TubeKind.EXTENSION2 if negative else TubeKind.EXTENSION1
        tubes.append(build_tube(data, i, radii.R[i], kind))
    census = frozenset(t.index for t in tubes if t.lutz_crossings)
    return FullForm(ml, radii, tuple(tubes), census, i0)


def export_tubes(tubes: Sequence[TubeForm]) -> list[dict]:
    return [
        {
            "index": t.index + 1,
            "kind": t.kind.value,
            "R": fmt(t.R),
            "endpoint": [fmt(v) for v in t.endpoint],
            "lutz_crossings": [fmt(r) for r in t.lutz_crossings],
            "curve": t.curve.to_record(),
        }
        for t in tubes
    ]
