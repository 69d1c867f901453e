from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slnlocal.exactmat import DimensionError, Mat
from slnlocal.slnlib import (
    BasisIndex,
    SlElement,
    TraceError,
    basis,
    bracket,
    sl2_e,
    sl2_f,
    sl2_h,
    to_coords,
    to_matrix,
    trace_form,
    unit,
)

from .helpers import rationals

e, f, h = sl2_e(), sl2_f(), sl2_h()


@st.composite
def elements(draw, n=None):
    n = draw(st.integers(2, 4)) if n is None else n
    return SlElement(n, tuple(draw(st.lists(rationals(4, 3), min_size=n * n - 1, max_size=n * n - 1))))


@st.composite
def triples(draw):
    n = draw(st.integers(2, 4))
    return draw(elements(n)), draw(elements(n)), draw(elements(n))


def test_basis_sl2_is_efh():
    assert basis(2) == [BasisIndex.offdiag(1, 2), BasisIndex.offdiag(2, 1), BasisIndex.cartan(1)]
    assert [to_matrix(x) for x in (e, f, h)] == [Mat.unit(2, 1, 2), Mat.unit(2, 2, 1), Mat.diag([1, -1])]


def test_basis_sl3_order():
    b = basis(3)
    assert len(b) == 8
    assert [str(x) for x in b] == ["E1,2", "E1,3", "E2,1", "E2,3", "E3,1", "E3,2", "h1", "h2"]


def test_basis_rejects_small_n():
    with pytest.raises(ValueError):
        basis(1)


def test_to_coords_examples():
    assert to_coords(Mat.diag([1, -1]), 2).coords == (0, 0, 1)
    with pytest.raises(TraceError):
        to_coords(Mat.identity(2), 2)
    # diag(2, -3, 1) = 2 h1 - h2
    assert to_coords(Mat.diag([2, -3, 1]), 3).coords[-2:] == (2, -1)


@given(elements())
def test_round_trip(x):
    m = to_matrix(x)
    assert m.trace() == 0
    assert to_coords(m, x.n) == x


def test_sl2_multiplication_table():
    assert bracket(e, f) == h
    assert bracket(h, e) == 2 * e
    assert bracket(f, h) == 2 * f


def test_matrix_unit_bracket_sl3():
    assert bracket(unit(3, 1, 2), unit(3, 2, 3)) == unit(3, 1, 3)


def test_bracket_size_mismatch():
    with pytest.raises(DimensionError):
        bracket(e, unit(3, 1, 2))


@given(triples())
def test_jacobi_antisymmetry_invariance(xyz):
    x, y, z = xyz
    zero = SlElement.zero(x.n)
    assert bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)) == zero
    assert bracket(x, y) == -bracket(y, x)
    assert bracket(x, x) == zero
    assert trace_form(bracket(x, y), z) == trace_form(x, bracket(y, z))
    assert trace_form(x, y) == trace_form(y, x)


def test_trace_form_examples():
    assert trace_form(e, e) == 0
    assert trace_form(e, f) == 1
    assert trace_form(h, h) == 2


@given(elements(2))
def test_trace_form_is_charpoly_constant(x):
    # for trace-zero 2x2, p_X(t) = t^2 - tr(X^2)/2 = t^2 + det X
    assert -trace_form(x, x) / 2 == to_matrix(x).det()


def test_json_forms():
    x = SlElement(2, (Fraction(1, 2), -3, 0))
    assert SlElement.from_json(x.to_json()) == x
    assert SlElement.from_json({"n": 2, "matrix": [["0", "1/2"], ["-3", "0"]]}) == x
    with pytest.raises(TraceError):
        SlElement.from_json({"n": 2, "matrix": [["1", "0"], ["0", "0"]]})
