import pytest
from hypothesis import given, settings

from slnlocal.exactmat import DimensionError, Mat, charpoly, rank
from slnlocal.sampling import random_matrix, random_similar_pair
from slnlocal.simwit import (
    SimilarityWitness,
    WitnessSearchExhausted,
    invertible_in_span,
    is_similar,
    similarity_witness,
    verify_witness,
)

from .helpers import M, square_mats
from .oracles import brute_force_similar

E = M([[0, 1], [0, 0]])
F = M([[0, 0], [1, 0]])
H = M([[1, 0], [0, -1]])
I2 = Mat.identity(2)
SWAP = M([[0, 1], [1, 0]])


def test_is_similar_examples():
    assert is_similar(E, F)
    assert not is_similar(H, E)


def test_transpose_similarity(rng):
    for _ in range(50):
        X = random_matrix(rng, rng.randint(2, 4), bound=3)
        assert is_similar(X, X.T)
        w = similarity_witness(X, X.T)
        assert w is not None and w.verify()


def test_size_mismatch():
    with pytest.raises(DimensionError):
        is_similar(I2, Mat.identity(3))


def test_invertible_in_span_examples():
    assert invertible_in_span([I2]) == I2
    assert invertible_in_span([E]) is None
    assert invertible_in_span([I2, E]) == I2
    assert invertible_in_span([]) is None


def test_invertible_in_span_needs_a_combination():
    # E11 and E22 are singular alone; E11 + E22 is not
    got = invertible_in_span([Mat.unit(2, 1, 1), Mat.unit(2, 2, 2)])
    assert got is not None and got.det() != 0


def test_similarity_witness_examples():
    w = similarity_witness(E, F)
    assert w.T == SWAP
    assert E @ SWAP == SWAP @ F == Mat.unit(2, 1, 1)
    assert SWAP.det() == -1
    assert similarity_witness(H, H).T == I2
    assert similarity_witness(H, E) is None


def test_budget_outcome_is_not_a_refutation():
    X = Mat.diag([1, 2])
    Y = M([[1, 1], [0, 2]])
    assert is_similar(X, Y)
    with pytest.raises(WitnessSearchExhausted):
        similarity_witness(X, Y, budget=0)
    assert similarity_witness(X, Y).verify()


def test_verify_witness_examples():
    assert verify_witness(E, F, SimilarityWitness(E, F, SWAP))
    assert not verify_witness(E, F, I2)
    assert not verify_witness(E, E, Mat.zeros(2))
    n, alpha = 3, 2
    X = Mat.unit(n, 1, n - 1)
    Y = Mat.unit(n, n, 1) + Mat.unit(n, n, n - 1).scale(alpha)
    T1 = M([[1, 0, 1], [1, 2, 0], [0, 1, 0]])
    assert verify_witness(X, Y, T1)


def test_similar_pairs_get_witnesses(rng):
    for _ in range(40):
        X, Y = random_similar_pair(rng, rng.randint(2, 4))
        assert is_similar(X, Y)
        w = similarity_witness(X, Y)
        assert w is not None and w.verify()


@settings(max_examples=40, deadline=None)
@given(square_mats(max_size=3, bound=2, max_den=1), square_mats(max_size=3, bound=2, max_den=1))
def test_agrees_with_determinantal_oracle(X, Y):
    if X.shape != Y.shape:
        return
    assert is_similar(X, Y) == brute_force_similar(X, Y)


def test_equivalence_relation(rng):
    for _ in range(20):
        size = rng.randint(2, 4)
        X, Y = random_similar_pair(rng, size)
        _, Z = random_similar_pair(rng, size)
        Z = Y if rng.random() < 0.5 else Z
        assert is_similar(X, X)
        assert is_similar(X, Y) == is_similar(Y, X)
        if is_similar(X, Y) and is_similar(Y, Z):
            assert is_similar(X, Z)


def test_necessary_conditions(rng):
    for _ in range(30):
        size = rng.randint(2, 4)
        X, Y = random_similar_pair(rng, size)
        assert charpoly(X) == charpoly(Y)
        for k in range(1, size + 1):
            assert rank(X ** k) == rank(Y ** k)
