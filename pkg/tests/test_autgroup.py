from fractions import Fraction

import pytest

from slnlocal.autgroup import (
    ANTI_AUTOMORPHISM,
    AUTOMORPHISM,
    NEITHER,
    LinMap,
    SignedAuto,
    anti,
    apply,
    check_bracket_morphism,
    compose,
    induced_matrix,
    inner,
    inverse_auto,
    neg_inner,
    outer,
    recognize,
)
from slnlocal.exactmat import DimensionError, Mat, rank
from slnlocal.sampling import random_element, random_invertible, random_signed_auto
from slnlocal.slnlib import SlElement, basis, sl2_e, sl2_f, sl2_h, to_matrix, unit

from .helpers import M

e, f, h = sl2_e(), sl2_f(), sl2_h()
I2 = Mat.identity(2)
I3 = Mat.identity(3)
T = M([[1, 0], [1, 1]])


def delta1(lam):
    lam = Fraction(lam)
    return LinMap(2, Mat.diag([lam, 1 / lam, 1]))


def delta2(mu):
    mu = Fraction(mu)
    return LinMap(2, M([[0, 1 / mu, 0], [mu, 0, 0], [0, 0, 1]]))


def test_apply_examples():
    x = SlElement(2, (3, -1, 2))
    assert apply(inner(I2), x) == x
    assert apply(inner(T), e) == e - f + h
    assert apply(outer(I3), unit(3, 1, 2)) == -unit(3, 2, 1)


def test_constructor_validation():
    with pytest.raises(ValueError):
        inner(M([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        SignedAuto(2, 2, "id", I2)
    with pytest.raises(DimensionError):
        apply(inner(I3), e)


def test_A_normalized():
    assert inner(I2.scale(5)).A == I2
    assert inner(M([[0, 3], [6, 0]])).A == M([[0, 1], [2, 0]])


def test_compose_examples():
    assert compose(anti(I2), anti(I2)) == inner(I2)
    assert compose(neg_inner(I2), neg_inner(I2)) == inner(I2)
    assert compose(outer(I3), anti(I3)) == neg_inner(I3)


def test_inverse_examples():
    A = M([[2, 1], [1, 1]])
    assert inverse_auto(inner(A)) == inner(A.inverse())
    assert inverse_auto(neg_inner(I2)) == neg_inner(I2)
    ident = compose(inner(T), inverse_auto(inner(T)))
    assert all(apply(ident, x) == x for x in (e, f, h))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_compose_matches_induced_product(rng, n):
    for _ in range(8):
        phi, psi = random_signed_auto(rng, n), random_signed_auto(rng, n)
        assert induced_matrix(compose(phi, psi)) == induced_matrix(phi) @ induced_matrix(psi)
        inv = inverse_auto(phi)
        assert induced_matrix(compose(phi, inv)) == LinMap.identity(n)
        assert induced_matrix(compose(inv, phi)) == LinMap.identity(n)


def test_induced_matrix_examples():
    assert induced_matrix(inner(I3)) == LinMap.identity(3)
    # e -> lam e, f -> f/lam is conjugation by diag(1, lam)
    assert induced_matrix(inner(Mat.diag([1, 3]))) == delta1(3)
    assert induced_matrix(neg_inner(M([[0, 1], [-2, 0]]))) == delta2(2)


def test_check_bracket_morphism_examples():
    assert check_bracket_morphism(delta1(3)) == AUTOMORPHISM
    assert check_bracket_morphism(delta2(2)) == ANTI_AUTOMORPHISM
    assert check_bracket_morphism(LinMap.identity(2).scale(2)) == NEITHER
    assert check_bracket_morphism(LinMap(2, Mat.zeros(3))) == NEITHER


@pytest.mark.parametrize("n", [2, 3, 4])
def test_morphism_types_and_negation(rng, n):
    for _ in range(6):
        A = random_invertible(rng, n)
        for ctor, kind in ((inner, AUTOMORPHISM), (outer, AUTOMORPHISM), (anti, ANTI_AUTOMORPHISM),
                           (neg_inner, ANTI_AUTOMORPHISM)):
            phi = ctor(A)
            assert phi.kind == kind
            assert check_bracket_morphism(induced_matrix(phi)) == kind
            flipped = check_bracket_morphism(induced_matrix(phi.negated()))
            assert flipped == (ANTI_AUTOMORPHISM if kind == AUTOMORPHISM else AUTOMORPHISM)


def test_recognize_examples():
    L = induced_matrix(inner(Mat.diag([1, 4])))
    phi = recognize(L)
    assert phi == inner(Mat.diag([1, 4]))
    assert recognize(LinMap.identity(2)) == inner(I2)
    assert recognize(LinMap.identity(2).scale(2)) is None


def test_recognize_never_returns_outer_on_sl2(rng):
    for _ in range(10):
        A = random_invertible(rng, 2)
        for ctor in (outer, anti):
            L = induced_matrix(ctor(A))
            phi = recognize(L)
            assert phi.twist == "id"
            assert induced_matrix(phi) == L


@pytest.mark.parametrize("n", [3, 4])
def test_recognize_round_trip(rng, n):
    for _ in range(5):
        phi = random_signed_auto(rng, n)
        psi = recognize(induced_matrix(phi))
        assert psi is not None
        assert induced_matrix(psi) == induced_matrix(phi)
        assert psi.kind == phi.kind


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank_preserved(rng, n):
    for _ in range(10):
        phi = random_signed_auto(rng, n)
        x = random_element(rng, n)
        if rng.random() < 0.5:
            x = SlElement(n, tuple(c if k % 3 == 0 else 0 for k, c in enumerate(x.coords)))
        assert rank(to_matrix(apply(phi, x))) == rank(to_matrix(x))


def test_linmap_json_round_trip(rng):
    L = induced_matrix(random_signed_auto(rng, 3))
    assert LinMap.from_json(L.to_json()) == L
    phi = random_signed_auto(rng, 3)
    assert SignedAuto.from_json(phi.to_json()) == phi


def test_linmap_images_and_basis_size():
    L = delta2(3)
    assert L(e) == 3 * f
    assert L(f) == Fraction(1, 3) * e
    assert len(L.images()) == len(basis(2))
