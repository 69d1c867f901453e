"""The Lie algebra sl_n with its canonical basis.

Basis order: for n = 2 it is (e, f, h) = (E12, E21, h1). For n >= 3 it is
every off-diagonal unit E_ij in lexicographic (i, j) order followed by
h_1, ..., h_{n-1} where h_i = E_ii - E_{i+1,i+1}. Indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exactmat import DimensionError, Mat, format_rational, parse_rational

__all__ = [
    "TraceError",
    "BasisIndex",
    "SlElement",
    "basis",
    "basis_matrices",
    "dim",
    "to_matrix",
    "to_coords",
    "bracket",
    "trace_form",
    "unit",
    "combination",
    "cartan",
    "sl2_e",
    "sl2_f",
    "sl2_h",
]


class TraceError(ValueError):
    pass


@dataclass(frozen=True)
class BasisIndex:
    kind: str  # "offdiag" or "cartan"
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind == "offdiag":
            if self.i == self.j or self.i < 1 or self.j < 1:
                raise ValueError(f"invalid off-diagonal index ({self.i}, {self.j})")
        elif self.kind == "cartan":
            if self.i < 1:
                raise ValueError(f"invalid Cartan index {self.i}")
        else:
            raise ValueError(f"unknown basis kind {self.kind!r}")

    @classmethod
    def offdiag(cls, i: int, j: int) -> "BasisIndex":
        return cls("offdiag", i, j)

    @classmethod
    def cartan(cls, i: int) -> "BasisIndex":
        return cls("cartan", i)

    def matrix(self, n: int) -> Mat:
        if self.kind == "offdiag":
            return Mat.unit(n, self.i, self.j)
        d = [0] * n
        d[self.i - 1] = 1
        d[self.i] = -1
        return Mat.diag(d)

    def __str__(self) -> str:
        if self.kind == "offdiag":
            return f"E{self.i},{self.j}"
        return f"h{self.i}"


def dim(n: int) -> int:
    return n * n - 1


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[BasisIndex, ...]:
    if n == 2:
        return (BasisIndex.offdiag(1, 2), BasisIndex.offdiag(2, 1), BasisIndex.cartan(1))
    off = tuple(BasisIndex.offdiag(i, j)
                for i in range(1, n + 1) for j in range(1, n + 1) if i != j)
    return off + tuple(BasisIndex.cartan(i) for i in range(1, n))


def basis(n: int) -> list[BasisIndex]:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"sl_n needs n >= 2, got {n!r}")
    return list(_basis(n))


@lru_cache(maxsize=None)
def basis_matrices(n: int) -> tuple[Mat, ...]:
    return tuple(b.matrix(n) for b in basis(n))


@lru_cache(maxsize=None)
def _offdiag_position(n: int) -> dict[tuple[int, int], int]:
    return {(b.i, b.j): k for k, b in enumerate(_basis(n)) if b.kind == "offdiag"}


@dataclass(frozen=True)
class SlElement:
    """Element of sl_n given by its coordinates in the canonical basis."""

    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"sl_n needs n >= 2, got {self.n}")
        coords = tuple(parse_rational(c) for c in self.coords)
        if len(coords) != dim(self.n):
            raise DimensionError(f"sl_{self.n} needs {dim(self.n)} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, n: int) -> "SlElement":
        return cls(n, (Fraction(0),) * dim(n))

    @classmethod
    def from_matrix(cls, m: Mat) -> "SlElement":
        return to_coords(m, m.rows)

    @property
    def matrix(self) -> Mat:
        return to_matrix(self)

    def _check(self, other: "SlElement") -> None:
        if self.n != other.n:
            raise DimensionError(f"sl_{self.n} vs sl_{other.n}")

    def __add__(self, other: "SlElement") -> "SlElement":
        self._check(other)
        return SlElement(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "SlElement") -> "SlElement":
        self._check(other)
        return SlElement(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "SlElement":
        return SlElement(self.n, tuple(-a for a in self.coords))

    def __rmul__(self, c) -> "SlElement":
        c = parse_rational(c)
        return SlElement(self.n, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> dict:
        return {"n": self.n, "coords": [format_rational(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "SlElement":
        if not isinstance(data, dict) or "n" not in data:
            raise ValueError("SlElement JSON needs an 'n' field")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise ValueError(f"invalid n: {n!r}")
        if "coords" in data:
            return cls(n, tuple(parse_rational(c) for c in data["coords"]))
        if "matrix" in data:
            m = Mat.from_json(data["matrix"])
            if m.shape != (n, n):
                raise DimensionError(f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}")
            return to_coords(m, n)
        raise ValueError("SlElement JSON needs 'coords' or 'matrix'")

    def __str__(self) -> str:
        terms = []
        for c, b in zip(self.coords, _basis(self.n)):
            if c:
                terms.append(f"{format_rational(c)}*{b}")
        return " + ".join(terms) if terms else "0"


def to_matrix(x: SlElement) -> Mat:
    n = x.n
    ents = [Fraction(0)] * (n * n)
    for c, b in zip(x.coords, _basis(n)):
        if not c:
            continue
        if b.kind == "offdiag":
            ents[(b.i - 1) * n + b.j - 1] += c
        else:
            ents[(b.i - 1) * (n + 1)] += c
            ents[b.i * (n + 1)] -= c
    return Mat._raw(n, n, tuple(ents))


def to_coords(m: Mat, n: int) -> SlElement:
    if m.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}")
    if m.trace() != 0:
        raise TraceError(f"trace is {format_rational(m.trace())}, not 0")
    coords = [Fraction(0)] * dim(n)
    for (i, j), k in _offdiag_position(n).items():
        coords[k] = m[i - 1, j - 1]
    # diagonal d_1..d_n = sum c_k h_k  =>  c_k = d_1 + ... + d_k
    start = dim(n) - (n - 1)
    running = Fraction(0)
    for k in range(n - 1):
        running += m[k, k]
        coords[start + k] = running
    return SlElement(n, tuple(coords))


def bracket(x: SlElement, y: SlElement) -> SlElement:
    x._check(y)
    X, Y = to_matrix(x), to_matrix(y)
    return to_coords(X @ Y - Y @ X, x.n)


def trace_form(x: SlElement, y: SlElement) -> Fraction:
    x._check(y)
    return (to_matrix(x) @ to_matrix(y)).trace()


def unit(n: int, i: int, j: int) -> SlElement:
    """The off-diagonal matrix unit E_ij as an element of sl_n."""
    k = _offdiag_position(n)[(i, j)]
    coords = [Fraction(0)] * dim(n)
    coords[k] = Fraction(1)
    return SlElement(n, tuple(coords))


def cartan(n: int, i: int) -> SlElement:
    coords = [Fraction(0)] * dim(n)
    coords[dim(n) - (n - 1) + i - 1] = Fraction(1)
    return SlElement(n, tuple(coords))


def sl2_e() -> SlElement:
    return SlElement(2, (1, 0, 0))


def sl2_f() -> SlElement:
    return SlElement(2, (0, 1, 0))


def sl2_h() -> SlElement:
    return SlElement(2, (0, 0, 1))


def combination(n: int, terms: Iterable[tuple[int, object]]) -> SlElement:
    """Element sum(c * basis[k]) from (k, c) pairs."""
    coords = [Fraction(0)] * dim(n)
    for k, c in terms:
        coords[k] += parse_rational(c)
    return SlElement(n, tuple(coords))

