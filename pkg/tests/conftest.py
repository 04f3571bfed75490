import random
from math import gcd

import pytest

from seifert_contact.fibration import SeifertMultilink, is_fibered
from seifert_contact.seifert import seifert


def random_a(rng, k, bound=13):
    while True:
        a = [rng.choice((-1, 1)) * rng.randint(1, bound) for _ in range(k)]
        if all(gcd(a[i], a[j]) == 1 for i in range(k) for j in range(i + 1, k)):
            return tuple(a)


def random_multilink(rng, kmax=4, bound=13, mmax=3):
    k = rng.randint(1, kmax)
    a = random_a(rng, k, bound)
    n = rng.randint(1, k)
    m = tuple(rng.choice((-1, 1)) * rng.randint(1, mmax) for _ in range(n))
    return SeifertMultilink(seifert(a), m)


def fibered_family(seed, count, **kw):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ml = random_multilink(rng, **kw)
        if is_fibered(ml):
            out.append(ml)
    return out


def other_b(a, b, rng):
    """Another valid numerator vector: b_i + t a_i, b_j - t a_j keeps sum b sigma and gcd(a_i, b_i)."""
    k = len(a)
    if k < 2:
        return tuple(b)
    i, j = rng.sample(range(k), 2)
    t = rng.randint(-3, 3)
    b = list(b)
    b[i] += t * a[i]
    b[j] -= t * a[j]
    return tuple(b)


@pytest.fixture
def rng():
    return random.Random(12345)


def _sg(x):
    return 1 if x > 0 else -1


def s3_case_configs(nmax=6, bound=7):
    """Links realising each case of the S^3 intersection formulas.

    Yields (case_id, n, p, q, a, m, idx) where idx is the measured component.
    """
    for n in range(2, nmax + 1):
        for p in range(-bound, bound + 1):
            for q in range(-bound, bound + 1):
                if p * q >= 0 or gcd(p, q) != 1:
                    continue
                a1 = (1,) * (n - 2) + (p, q)
                yield "1-exceptional", n, p, q, a1, (1,) * (n - 2) + (-_sg(p), _sg(q)), n - 2
                if n >= 3:
                    yield "1-regular", n, p, q, a1, (-1,) + (1,) * (n - 3) + (_sg(p), _sg(q)), 0
                a2 = (1,) * (n - 1) + (p, q)
                yield "2-exceptional", n, p, q, a2, (1,) * (n - 1) + (-_sg(p),), n - 1
                yield "2-regular", n, p, q, a2, (-1,) + (1,) * (n - 2) + (_sg(p),), 0
                if abs(p) == 1 and n >= 3:
                    yield "3", n, p, q, (1,) * n + (p, q), (-1,) + (1,) * (n - 1), 1


ACCEPTANCE: list[str] = []


def report(criterion, ok, detail):
    """Record (and print) one acceptance line; returns ok for the assert."""
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
