"""Shared helpers for the test suite."""

import random

from podium.series import Series, constant


def random_series(rng: random.Random, order: int) -> Series:
    coeffs = []
    for _ in range(order + 1):
        if rng.random() < 0.9:
            coeffs.append(rng.randint(-9, 9))
        else:
            coeffs.append(rng.randint(-(10**12), 10**12))
    return Series(coeffs)


def unit_series(rng: random.Random, order: int) -> Series:
    coeffs = [rng.choice((1, -1))]
    coeffs.extend(rng.randint(-9, 9) for _ in range(order))
    return Series(coeffs)


def run_algebra_trials(seed: int, rounds: int) -> int:
    """Randomized ring-law checks; returns the number of cases exercised.

    Each round draws fresh operands at a random order up to 64 and checks
    commutativity, associativity, distributivity, the inverse contract,
    and the substitution support property.  Any violation asserts.
    """
    rng = random.Random(seed)
    cases = 0
    for _ in range(rounds):
        order = rng.randint(0, 64)
        a = random_series(rng, order)
        b = random_series(rng, order)
        c = random_series(rng, order)

        assert a * b == b * a
        cases += 1
        assert a * (b * c) == (a * b) * c
        cases += 1
        assert a * (b + c) == a * b + a * c
        cases += 1

        u = unit_series(rng, order)
        assert u * u.inverse() == constant(1, order)
        cases += 1

        k = rng.randint(1, 4)
        sign = rng.choice((1, -1))
        sub = a.substitute(k, sign)
        assert all(sub[i] == 0 for i in range(order + 1) if i % k)
        cases += 1
    return cases
