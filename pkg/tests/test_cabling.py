import itertools
from math import gcd

import pytest

from seifert_contact.cabling import (
    EXTERNAL_NOTE,
    CablingSign,
    CablingSpec,
    ParentState,
    cabling_sign,
    classify_cabling,
    knot_parent,
    normalize_basis,
    parent_state,
    seifert_model,
)
from seifert_contact.classifier import VerdictKind, classify
from seifert_contact.errors import Degenerate, NotApplicable, QZero, ValidationError

TIGHT, OT = ParentState.TIGHT, ParentState.OVERTWISTED


def test_normalize_example():
    spec = normalize_basis(CablingSpec(3, 1, 5, 2))
    assert (spec.u, spec.v, spec.q, spec.p) == (1, 2, -5, 3)


def test_seifert_model_example():
    spec = CablingSpec(3, 2, 1, 1)
    sign = cabling_sign(spec)
    assert (sign.eps, sign.eps_n) == (-1, -1)
    ml = seifert_model(spec, sign, [1, 1])
    assert ml.data.a == (1, -2, -3)
    assert ml.m == (-1, -1)
    # eps survives re-basing, eps_n follows the sign of q
    assert cabling_sign(normalize_basis(spec)) == CablingSign(-1, 1)


def test_seifert_model_drops_zero_core():
    spec = knot_parent(2, 3)
    ml = seifert_model(spec, cabling_sign(spec), [1, 0])
    assert ml.n == 1 and ml.data.a == (1, 3, 2)


def test_knot_parent():
    spec = knot_parent(4, -6)
    assert (spec.u, spec.v, spec.cable_components) == (0, 1, 2)
    with pytest.raises(QZero):
        knot_parent(2, 0)


def test_spec_validation():
    for bad in [(0, 1, 0, 1), (2, 1, 0, 0), (2, 1, 2, 4)]:
        with pytest.raises(ValidationError):
            CablingSpec(*bad)
    with pytest.raises(ValidationError):
        CablingSpec(2, 1, 0, 1, 0)


def test_parent_state_from_verdicts():
    assert parent_state(VerdictKind.TIGHT) is TIGHT
    assert parent_state(VerdictKind.STEIN_FILLABLE_TIGHT) is TIGHT
    assert parent_state(VerdictKind.OVERTWISTED) is OT
    with pytest.raises(NotApplicable):
        parent_state(VerdictKind.UNKNOWN)


def _table(p, q, u, v, comps, parent):
    """Oracle written straight from the cabling theorem, no re-basing."""
    det = q * v - p * u
    if parent is OT:
        return "overtwisted"
    if det > 0:
        return "tight"
    if comps >= 2:
        return "overtwisted"
    if p == 1:
        return "tight"
    # q is only meaningful in the reduced basis 0 <= u < v
    t = u // v
    qn = q - t * p if q - t * p != 0 else q - (t - 1) * p
    if qn <= -2:
        return "overtwisted"
    return "unknown"


KIND = {VerdictKind.TIGHT: "tight", VerdictKind.OVERTWISTED: "overtwisted", VerdictKind.UNKNOWN: "unknown"}

GRID = [
    (p, q, u, v, c, parent)
    for p, q in itertools.product(range(1, 8), range(-7, 8))
    for u, v in [(0, 1), (1, 1), (-1, 1), (1, 2), (3, 2), (2, 3), (-5, 3)]
    for c in (1, 2)
    for parent in (TIGHT, OT)
    if q != 0
]


def test_table_oracle_and_totality():
    decided = 0
    for p, q, u, v, c, parent in GRID:
        spec = CablingSpec(p, q, u, v, c, parent)
        try:
            verdict = classify_cabling(spec)
        except (Degenerate, QZero):
            continue
        assert KIND[verdict.kind] == _table(p, q, u, v, c, parent), spec
        decided += verdict.kind is not VerdictKind.UNKNOWN
    assert decided > len(GRID) // 2


def test_degenerate_only_when_parallel():
    for p, q, u, v, c, parent in GRID:
        try:
            classify_cabling(CablingSpec(p, q, u, v, c, parent))
        except Degenerate:
            assert q * v == p * u
        except QZero:
            pass


def test_unknown_notes():
    v = classify_cabling(knot_parent(3, -1))
    assert v.kind is VerdictKind.UNKNOWN and v.notes == (EXTERNAL_NOTE,)
    v = classify_cabling(CablingSpec(5, 2, 1, 2))
    assert v.kind is VerdictKind.UNKNOWN and v.notes == ("not covered by the cabling theorem",)


def test_rebasing_invariance():
    for p, q, u, v, c, parent in GRID:
        try:
            base = classify_cabling(CablingSpec(p, q, u, v, c, parent))
        except (Degenerate, QZero):
            continue
        for t in (-3, -1, 2, 5):
            if q + t * p == 0:
                continue
            moved = CablingSpec(p, q + t * p, u + t * v, v, c, parent)
            assert cabling_sign(moved).eps == cabling_sign(CablingSpec(p, q, u, v, c, parent)).eps
            assert classify_cabling(moved).kind is base.kind


def test_negative_with_positive_q_rebased_away_when_v_is_one():
    for p, q, u in itertools.product(range(1, 9), range(-9, 10), range(-9, 10)):
        if q == 0 or q == p * u:
            continue
        try:
            spec = normalize_basis(CablingSpec(p, q, u, 1))
        except QZero:
            continue
        if not cabling_sign(spec).positive:
            assert spec.q < 0


def test_negative_with_positive_q_survives_for_v_two():
    spec = normalize_basis(CablingSpec(5, 2, 1, 2))
    assert not cabling_sign(spec).positive and spec.q == 2


def test_model_agrees_with_table_on_unknot_cables():
    # cables of the unknot: the model is the torus link itself
    for p, q in itertools.product(range(1, 11), range(-10, 11)):
        if q == 0:
            continue
        spec = knot_parent(p, q)
        table = classify_cabling(spec)
        norm = normalize_basis(spec)
        model = classify(seifert_model(norm, cabling_sign(norm), [1] * gcd(p, abs(q)) + [0]))
        if table.kind is VerdictKind.UNKNOWN:
            assert q == -1 and model.is_tight  # the trivial knot
        else:
            assert table.is_tight == model.is_tight, (p, q)
