from fractions import Fraction

from hypothesis import strategies as st

from slnlocal.exactmat import Mat


def rationals(bound=6, max_den=4):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


@st.composite
def square_mats(draw, min_size=1, max_size=4, bound=4, max_den=3):
    n = draw(st.integers(min_size, max_size))
    return Mat(n, n, draw(st.lists(rationals(bound, max_den), min_size=n * n, max_size=n * n)))


def M(rows):
    return Mat.from_rows(rows)
