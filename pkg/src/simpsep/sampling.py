"""Seeded random rational points and linear systems."""
from __future__ import annotations

import random
from fractions import Fraction

from .geometry import BaryPoint, LE, LT, EQ, LinSystem, Row


def random_point(k: int, rng: random.Random, weight: int = 12) -> BaryPoint:
    """A rational point of ``Delta^k`` from integer weights in ``[0, weight]``; may hit faces."""
    while True:
        w = [rng.randint(0, weight) for _ in range(k + 1)]
        total = sum(w)
        if total:
            return BaryPoint(tuple(Fraction(v, total) for v in w))


def random_composition(k: int, denom: int, rng: random.Random) -> list[int]:
    """Uniform composition of ``denom`` into ``k + 1`` non-negative parts."""
    cuts = sorted(rng.sample(range(denom + k), k))
    parts, prev = [], -1
    for c in cuts:
        parts.append(c - prev - 1)
        prev = c
    parts.append(denom + k - prev - 1)
    return parts


def random_system(rng: random.Random, nvars: int, nrows: int, span: int = 4) -> LinSystem:
    rows = []
    for _ in range(nrows):
        coeffs = tuple(Fraction(rng.randint(-span, span)) for _ in range(nvars))
        rel = rng.choice((LT, LE, LE, EQ) if rng.random() < 0.15 else (LT, LE))
        rows.append(Row(coeffs, rel, Fraction(rng.randint(-span, span), rng.randint(1, 3))))
    return LinSystem(nvars, tuple(rows))


def random_rational_vector(n: int, rng: random.Random, span: int = 6, denom: int = 8) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-span * denom, span * denom), denom) for _ in range(n))
