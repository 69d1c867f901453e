"""Exact similarity decisions and explicit conjugating witnesses.

Two independent routes are kept side by side: :func:`is_similar` compares
invariant factors (a complete invariant), while :func:`similarity_witness`
solves the intertwiner equation X T = T Y and looks for an invertible
solution. Callers can cross-check one against the other.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exactmat import DimensionError, Mat, Poly, charpoly, det, invariant_factors, kernel_basis

__all__ = [
    "DEFAULT_RANDOM_DRAWS",
    "WitnessSearchExhausted",
    "SimilarityWitness",
    "intertwiner_system",
    "cached_invariant_factors",
    "is_similar",
    "invertible_in_span",
    "similarity_witness",
    "verify_witness",
]

DEFAULT_RANDOM_DRAWS = 1000
_SMALL_COEFFS = (-2, -1, 1, 2)
_SMALL_TIER_MAX_DIM = 4
_RANDOM_RANGE = 9


class WitnessSearchExhausted(RuntimeError):
    """The matrices are similar but no invertible intertwiner was hit within budget."""


@dataclass(frozen=True)
class SimilarityWitness:
    X: Mat
    Y: Mat
    T: Mat

    def verify(self) -> bool:
        return verify_witness(self.X, self.Y, self)

    def to_json(self) -> dict:
        return {"T": self.T.to_json()}


def _check_pair(X: Mat, Y: Mat) -> None:
    if not X.is_square or X.shape != Y.shape:
        raise DimensionError(f"need two square matrices of equal size, got {X.shape} and {Y.shape}")


def intertwiner_system(pairs: Sequence[tuple[Mat, Mat]]) -> Mat:
    """Matrix of T -> (X T - T Y for each pair), acting on row-major vec(T)."""
    n = pairs[0][0].rows
    nn = n * n
    rows = []
    for X, Y in pairs:
        _check_pair(X, Y)
        if X.rows != n:
            raise DimensionError("all pairs must share one size")
        for i in range(n):
            for j in range(n):
                r = [Fraction(0)] * nn
                for k in range(n):
                    xv = X[i, k]
                    if xv:
                        r[k * n + j] += xv
                    yv = Y[k, j]
                    if yv:
                        r[i * n + k] -= yv
                rows.append(r)
    return Mat._raw(len(rows), nn, tuple(v for r in rows for v in r))


@lru_cache(maxsize=4096)
def cached_invariant_factors(m: Mat) -> tuple[Poly, ...]:
    return tuple(invariant_factors(m))


def is_similar(X: Mat, Y: Mat) -> bool:
    _check_pair(X, Y)
    if X == Y:
        return True
    if charpoly(X) != charpoly(Y):
        return False
    return cached_invariant_factors(X) == cached_invariant_factors(Y)


def _combinations(k: int, seed: int) -> Iterator[tuple[int, ...]]:
    for i in range(k):
        yield tuple(int(i == j) for j in range(k))
    if k <= _SMALL_TIER_MAX_DIM:
        yield from itertools.product(_SMALL_COEFFS, repeat=k)
    rng = random.Random(seed)
    for _ in range(DEFAULT_RANDOM_DRAWS):
        c = tuple(rng.randint(-_RANDOM_RANGE, _RANDOM_RANGE) for _ in range(k))
        if any(c):
            yield c


def invertible_in_span(vectors: Sequence[Mat], budget: int | None = None, seed: int = 0) -> Mat | None:
    """Find an invertible linear combination of ``vectors``.

    Candidates are tried in a fixed order: each vector alone, every
    {-2,-1,1,2} coefficient tuple when there are at most four vectors, then
    seeded random integer combinations. ``budget`` caps the number of
    candidates examined; ``None`` runs the whole schedule.
    """
    if not vectors:
        return None
    shape = vectors[0].shape
    if any(v.shape != shape for v in vectors) or shape[0] != shape[1]:
        raise DimensionError("invertible_in_span needs square matrices of one shape")
    k = len(vectors)
    for tried, coeffs in enumerate(_combinations(k, seed)):
        if budget is not None and tried >= budget:
            break
        acc = [Fraction(0)] * (shape[0] * shape[1])
        for c, v in zip(coeffs, vectors):
            if c:
                acc = [a + c * b for a, b in zip(acc, v.entries)]
        cand = Mat._raw(shape[0], shape[1], tuple(acc))
        if det(cand) != 0:
            return cand
    return None


def _vec_to_mat(v: Sequence[Fraction], n: int) -> Mat:
    return Mat._raw(n, n, tuple(v))


def similarity_witness(X: Mat, Y: Mat, budget: int | None = None, seed: int = 0) -> SimilarityWitness | None:
    """Return T with X T = T Y and det T != 0, or None if X and Y are not similar.

    Raises :class:`WitnessSearchExhausted` when the matrices are similar but
    the candidate budget ran out first.
    """
    _check_pair(X, Y)
    if not is_similar(X, Y):
        return None
    n = X.rows
    if X == Y:
        return SimilarityWitness(X, Y, Mat.identity(n))
    kernel = [_vec_to_mat(v, n) for v in kernel_basis(intertwiner_system([(X, Y)]))]
    T = invertible_in_span(kernel, budget=budget, seed=seed)
    if T is None:
        raise WitnessSearchExhausted(f"similar {n}x{n} pair, no invertible intertwiner within budget")
    return SimilarityWitness(X, Y, T)


def verify_witness(X: Mat, Y: Mat, w: SimilarityWitness | Mat) -> bool:
    T = w.T if isinstance(w, SimilarityWitness) else w
    if not (X.is_square and X.shape == Y.shape == T.shape):
        return False
    return det(T) != 0 and X @ T == T @ Y
