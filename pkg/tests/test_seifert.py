import importlib
import itertools
from fractions import Fraction
from math import prod

import pytest

from conftest import other_b, random_a
from seifert_contact.errors import BadZeroPattern, NotCoprime, NotHomologySphere, ValidationError, ZeroDenominator
from seifert_contact.fibration import fiber_boundary_slope, multilink, normalize_ptp
from seifert_contact.seifert import (
    Basis,
    CurveClass,
    basis_change,
    euler_number,
    fiber_linking,
    linking_number,
    seifert,
    solve_b,
    validate,
)

seifert_mod = importlib.import_module("seifert_contact.seifert")


def test_validate_examples():
    d = validate((2, 3), (-1, 2))
    assert (d.A, d.sigma, d.delta) == (6, (3, 2), (2, -1))
    d = validate((1,), (1,))
    assert (d.A, d.sigma, d.delta) == (1, (1,), (0,))


@pytest.mark.parametrize(
    "a,b,err",
    [
        ((2, 4), (1, 1), NotCoprime),
        ((2, 3), (2, 1), NotCoprime),  # gcd(a_1, b_1) = 2
        ((2, 3), (1, 1), NotHomologySphere),
        ((0, 0), (1, 1), BadZeroPattern),
        ((0, 2), (1, 1), BadZeroPattern),
        ((2, 3), (1,), ValidationError),
    ],
)
def test_validate_rejects(a, b, err):
    with pytest.raises(err):
        validate(a, b)


def test_solve_b_examples():
    assert solve_b((1,)) == (1,)
    assert solve_b((2, 3)) == (-1, 2)
    assert solve_b((2, 3, 5)) == (-1, 1, 1)


def test_solve_b_matches_exhaustive_search():
    # oracle: brute force over small numerators, filtered by the canonical residue rule
    for a in [(2, 3), (2, 3, 5), (3, 4), (2, -5), (-3, 7), (1, 2, 3)]:
        sigma = [prod(a[:i] + a[i + 1:]) for i in range(len(a))]
        found = [
            b
            for b in itertools.product(range(-40, 41), repeat=len(a))
            if sum(x * s for x, s in zip(b, sigma)) == 1
            and all(b[i] == (pow(sigma[i], -1, abs(a[i])) if abs(a[i]) > 1 else 0) for i in range(1, len(a)))
        ] if len(a) < 3 else None
        b = solve_b(a)
        assert sum(x * s for x, s in zip(b, sigma)) == 1
        if found is not None:
            assert found == [b]


def test_solve_b_keychain():
    d = seifert((0, 1, -1))
    assert d.b == (-1, 0, 0)
    assert d.zero_index == 0


def test_random_solve_b_valid(rng):
    for _ in range(500):
        a = random_a(rng, rng.randint(1, 5), 30)
        validate(a, solve_b(a))


def test_basis_change_examples():
    d = validate((2, 3), (-1, 2))
    m1 = basis_change(CurveClass(1, 0, Basis.MERIDIAN_LONGITUDE, 0), d)
    assert (m1.x, m1.y) == (2, -1)
    h = basis_change(CurveClass(0, 1, Basis.SECTION_FIBER, 0), d)
    assert (h.x, h.y) == (3, 2)
    l1 = basis_change(CurveClass(0, 1, Basis.MERIDIAN_LONGITUDE, 0), validate((1,), (1,)))
    assert (l1.x, l1.y) == (-1, 0)


def test_basis_change_round_trip(rng):
    for _ in range(300):
        a = random_a(rng, rng.randint(1, 4))
        d = seifert(a)
        i = rng.randrange(d.k)
        c = CurveClass(rng.randint(-9, 9), rng.randint(-9, 9), Basis.MERIDIAN_LONGITUDE, i)
        there = basis_change(c, d)
        assert there.basis is Basis.SECTION_FIBER
        assert basis_change(there, d) == c


def test_linking_magnitudes():
    d = seifert((1, 5, -7))
    assert abs(linking_number(d, 0, 2)) == 5
    assert abs(linking_number(seifert((2, 3)), 0, 1)) == 1
    with pytest.raises(ZeroDenominator):
        linking_number(seifert((0, 1)), 0, 1)
    assert fiber_linking(seifert((0, 1, 1)), 1, 2) == 0


def test_linking_aggregate_case_one():
    # n-2 regular fibers and the q-fiber all link S_{n-1} (the p-fiber): total (n-2)|q| + 1
    for n in range(3, 7):
        for p, q in [(2, -3), (3, -5), (5, -2)]:
            d = seifert((1,) * (n - 2) + (p, q))
            others = [j for j in range(d.k) if j != n - 2]
            assert sum(abs(linking_number(d, n - 2, j)) for j in others) == (n - 2) * abs(q) + 1


def test_euler_number():
    assert euler_number(validate((2, 3), (-1, 2))) == Fraction(-1, 6)
    assert euler_number(validate((1,), (1,))) == -1
    assert euler_number(validate((2, 3), (1, -1))) == Fraction(-1, 6)


def test_euler_number_is_minus_inverse_A_and_b_independent(rng):
    for _ in range(300):
        a = random_a(rng, rng.randint(1, 4))
        d = seifert(a)
        for _ in range(3):
            d2 = validate(a, other_b(a, d.b, rng))
            assert euler_number(d2) == Fraction(-1, d.A)


def test_linking_sign_calibration(monkeypatch):
    """+1 makes the slope identity hold on the worked examples; -1 breaks it."""
    cases = [((1, 2, 3), (1, -1)), ((1, 2, -3), (-1,)), ((2, 3, 5), (1, 2)), ((1, 3, -7, 2), (2, -1, 1))]

    def residuals():
        out = []
        for a, m in cases:
            try:
                ml, _ = normalize_ptp(multilink(a, m))
                out.append(fiber_boundary_slope(ml).identity_residual(ml.data))
            except Exception:
                out.append(None)
        return out

    assert residuals() == [0] * len(cases)
    monkeypatch.setattr(seifert_mod, "LINKING_SIGN", -1)
    assert any(r != 0 for r in residuals())
