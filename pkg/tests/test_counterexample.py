from fractions import Fraction

import pytest

from slnlocal.counterexample import (
    DeltaAlpha,
    build_delta_alpha,
    delta_alpha_conjugators,
    demo,
    refute_delta_alpha,
    verify_identities,
)
from slnlocal.exactmat import Mat, det, rank
from slnlocal.localcheck import PointCertificate, point_witness
from slnlocal.simwit import verify_witness
from slnlocal.slnlib import cartan, to_coords, to_matrix, unit

from .helpers import M

GRID = [(n, a) for n in (3, 4, 5) for a in (1, 2, -3, Fraction(1, 2))]


def test_images_n3():
    delta = build_delta_alpha(DeltaAlpha(3, 1))
    assert delta(unit(3, 1, 2)) == unit(3, 3, 1) + unit(3, 3, 2)
    assert delta(unit(3, 2, 1)) == unit(3, 2, 1)
    assert delta(unit(3, 1, 3)) == unit(3, 1, 2)
    assert delta(unit(3, 3, 1)) == unit(3, 3, 2)
    assert delta(unit(3, 3, 2)) == unit(3, 1, 3)
    assert delta(cartan(3, 1)) == cartan(3, 1)


@pytest.mark.parametrize("n,alpha", [(2, 1), (3, 0), (1, 1)])
def test_domain_errors(n, alpha):
    with pytest.raises(ValueError):
        DeltaAlpha(n, alpha)


def test_conjugators_n3():
    T1, T2, T3, T4 = delta_alpha_conjugators(DeltaAlpha(3, 2))
    assert T1 == M([[1, 0, 1], [1, 2, 0], [0, 1, 0]])
    assert det(T1) == 1
    assert T2 == M([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert T3 == M([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert T4 == M([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


@pytest.mark.parametrize("n,alpha", GRID)
def test_conjugators_invertible_and_identities(n, alpha):
    spec = DeltaAlpha(n, alpha)
    assert all(det(T) != 0 for T in delta_alpha_conjugators(spec))
    assert verify_identities(spec)


def test_identities_fail_for_a_wrong_alpha():
    # conjugators built for alpha=2 do not intertwine the alpha=1 image
    T1 = delta_alpha_conjugators(DeltaAlpha(3, 2))[0]
    E = Mat.unit(3, 1, 2)
    assert not verify_witness(E, Mat.unit(3, 3, 1) + Mat.unit(3, 3, 2), T1)


@pytest.mark.parametrize("n,alpha", [(3, 1), (4, 2)])
def test_square_image_rank(n, alpha):
    ref = refute_delta_alpha(DeltaAlpha(n, alpha))
    expected = Mat.unit(n, n, n - 1) + Mat.unit(n, 1, n).scale(alpha)
    assert ref.square_image == expected
    assert ref.square_image_rank == 2
    assert ref.source_rank == 1
    assert ref.direct is not None and ref.direct.tier == "pairs"
    assert ref.refuted


@pytest.mark.parametrize("n,alpha", [(3, 1), (4, -3)])
def test_moved_units_certified_by_search(n, alpha):
    spec = DeltaAlpha(n, alpha)
    delta = build_delta_alpha(spec)
    for (src, dst), T in zip(spec.moved(), delta_alpha_conjugators(spec)):
        cert = point_witness(delta, to_coords(src, n))
        assert isinstance(cert, PointCertificate) and cert.verify()
        assert to_matrix(cert.image) == dst
        assert verify_witness(src, dst, T)


def test_demo_report():
    out = demo(DeltaAlpha(3, 1))
    assert out == {
        "n": 3,
        "alpha": "1",
        "identities_verified": True,
        "basis_certified": True,
        "rank_of_delta_squared_image": 2,
        "direct_refutation_point": (unit(3, 1, 2) + unit(3, 1, 3)).to_json(),
        "verdict": "not a local automorphism",
    }
    assert rank(to_matrix(unit(3, 1, 2))) == 1
