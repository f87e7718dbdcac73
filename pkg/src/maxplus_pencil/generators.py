"""Seeded random instances for tests and the command line."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import BOTTOM, Matrix
from .spectrum import IntervalSystem


def random_rational(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_interval_system(
    rng: random.Random,
    max_intervals: int = 4,
    max_den: int = 4,
    lo: int = -10,
    hi: int = 10,
    point_prob: float = 0.25,
) -> IntervalSystem:
    m = rng.randint(1, max_intervals)
    pts: set = set()
    while len(pts) < 2 * m:
        pts.add(random_rational(rng, lo, hi, max_den))
    pts = sorted(pts)
    ivs = []
    for i in range(m):
        a, c = pts[2 * i], pts[2 * i + 1]
        ivs.append((a, a) if rng.random() < point_prob else (a, c))
    return IntervalSystem(ivs)


def random_matrix(
    rng: random.Random,
    n: int,
    m: int,
    lo: int = -5,
    hi: int = 5,
    bottom_prob: float = 0.0,
) -> Matrix:
    return Matrix(
        tuple(
            tuple(BOTTOM if rng.random() < bottom_prob else Fraction(rng.randint(lo, hi)) for _ in range(m))
            for _ in range(n)
        )
    )
