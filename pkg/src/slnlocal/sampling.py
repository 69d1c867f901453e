"""Seeded random rational objects for tests and demos."""

from __future__ import annotations

import random
from fractions import Fraction

from .autgroup import LinMap, SignedAuto
from .exactmat import Mat, det
from .slnlib import SlElement, dim


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_matrix(rng: random.Random, rows: int, cols: int | None = None, bound: int = 3,
                  max_den: int = 1) -> Mat:
    cols = rows if cols is None else cols
    return Mat(rows, cols, (random_rational(rng, bound, max_den) for _ in range(rows * cols)))


def random_invertible(rng: random.Random, n: int, bound: int = 3, max_den: int = 1) -> Mat:
    while True:
        m = random_matrix(rng, n, n, bound, max_den)
        if det(m) != 0:
            return m


def random_element(rng: random.Random, n: int, bound: int = 5, max_den: int = 3) -> SlElement:
    return SlElement(n, tuple(random_rational(rng, bound, max_den) for _ in range(dim(n))))


def random_signed_auto(rng: random.Random, n: int, sign: int | None = None, twist: str | None = None) -> SignedAuto:
    sign = rng.choice((1, -1)) if sign is None else sign
    twist = rng.choice(("id", "transpose")) if twist is None else twist
    return SignedAuto(n, sign, twist, random_invertible(rng, n))


def random_linmap(rng: random.Random, n: int, bound: int = 3, max_den: int = 2) -> LinMap:
    return LinMap(n, random_matrix(rng, dim(n), dim(n), bound, max_den))


def random_similar_pair(rng: random.Random, size: int) -> tuple[Mat, Mat]:
    """(X, P^-1 X P) for random integer X and invertible P.

    X is drawn with repeated eigenvalue structure now and then so that
    derogatory cases are exercised too.
    """
    if rng.random() < 0.3:
        X = _structured_matrix(rng, size)
    else:
        X = random_matrix(rng, size, size, bound=3)
    P = random_invertible(rng, size, bound=2)
    return X, P.inverse() @ X @ P


def _structured_matrix(rng: random.Random, size: int) -> Mat:
    # block-diagonal from a few scalar/Jordan blocks, then conjugated
    vals = [rng.randint(-2, 2) for _ in range(2)]
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = Fraction(vals[i % 2 if rng.random() < 0.5 else 0])
        if i + 1 < size and rows[i][i] == 0 and rng.random() < 0.5:
            rows[i][i + 1] = Fraction(1)
    P = random_invertible(rng, size, bound=2)
    M = Mat.from_rows(rows)
    return P.inverse() @ M @ P
