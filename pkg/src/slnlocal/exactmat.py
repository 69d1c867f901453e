"""Exact rational scalars, univariate polynomials and dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps values reduced
with a positive denominator. :class:`Poly` and :class:`Mat` are small
immutable containers built on top of it, sized for desk-scale work
(matrices up to roughly 16x16, polynomial matrices up to 6x6).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "DimensionError",
    "SingularMatrixError",
    "RationalParseError",
    "parse_rational",
    "format_rational",
    "Poly",
    "Mat",
    "det",
    "rank",
    "inverse",
    "kernel_basis",
    "charpoly",
    "invariant_factors",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    def __init__(self, message: str = "matrix is singular", det: Fraction = Fraction(0)):
        super().__init__(message)
        self.det = det


class RationalParseError(ValueError):
    pass


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise RationalParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise RationalParseError(f"not a rational: {value!r}")
    m = _RATIONAL_RE.match(value)
    if m is None:
        raise RationalParseError(f"not a rational: {value!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(f"zero denominator: {value!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial over the rationals, coefficients lowest degree first.

    The zero polynomial is stored as an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly(c / lc for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lc = other.lead
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lc
            quot[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.const(value)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Mat:
    """Dense immutable rational matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        ents = tuple(parse_rational(v) for v in entries)
        if len(ents) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(ents)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Fraction, ...] = ents

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, (v for r in rows for v in r))

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "Mat":
        # Trusted constructor: entries are already a tuple of Fractions.
        m = object.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, entries
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Mat":
        """Matrix unit E_ij (1-based indices) of size n."""
        ents = [Fraction(0)] * (n * n)
        ents[(i - 1) * n + (j - 1)] = Fraction(1)
        return cls._raw(n, n, tuple(ents))

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        ents = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            ents[i * n + i] = parse_rational(v)
        return cls._raw(n, n, tuple(ents))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def _check_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat._raw(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Mat":
        c = parse_rational(c)
        return Mat._raw(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __rmul__(self, c) -> "Mat":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, c) -> "Mat":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        # multiply integer numerators over one common denominator per factor
        da = lcm(*(v.denominator for v in self.entries)) if self.entries else 1
        db = lcm(*(v.denominator for v in other.entries)) if other.entries else 1
        a = [v.numerator * (da // v.denominator) for v in self.entries]
        b = [v.numerator * (db // v.denominator) for v in other.entries]
        bcols = [b[j::m] for j in range(m)]
        den = da * db
        out = []
        for i in range(n):
            r = a[i * k:(i + 1) * k]
            for col in bcols:
                out.append(Fraction(sum(x * y for x, y in zip(r, col)), den))
        return Mat._raw(n, m, tuple(out))

    @property
    def T(self) -> "Mat":
        return Mat._raw(self.cols, self.rows, tuple(self.entries[i * self.cols + j]
                                                    for j in range(self.cols)
                                                    for i in range(self.rows)))

    def transpose(self) -> "Mat":
        return self.T

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), Fraction(0))

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square or k < 0:
            raise DimensionError("power needs a square matrix and k >= 0")
        out = Mat.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- linear algebra ---------------------------------------------------

    def det(self) -> Fraction:
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Mat":
        return inverse(self)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[list[str]]:
        return [[format_rational(v) for v in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> "Mat":
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise DimensionError("matrix JSON must be an array of arrays")
        return cls.from_rows([[parse_rational(v) for v in r] for r in data])

    def __repr__(self) -> str:
        return f"Mat({self.to_json()})"


def _require_square(m: Mat, what: str) -> None:
    if not m.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    # scaling a row by a nonzero constant leaves row space and kernel unchanged
    den = lcm(*(v.denominator for v in row)) if row else 1
    return [v.numerator * (den // v.denominator) for v in row]


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [v // g for v in row]
    return row


def _int_echelon(rows: list[list[int]], ncols: int, reduced: bool) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gaussian elimination on integer rows.

    Returns the nonzero rows (primitive, pivot entries positive) and the
    pivot columns. With ``reduced`` every pivot column is cleared above its
    pivot too, so dividing each row by its pivot gives the RREF.
    """
    rows = [r for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        if pr[c] < 0:
            pr = rows[r] = [-v for v in pr]
        pv = pr[c]
        targets = range(len(rows)) if reduced else range(r + 1, len(rows))
        for i in targets:
            if i == r:
                continue
            f = rows[i][c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                rows[i] = _primitive([a * x - b * y for x, y in zip(rows[i], pr)])
        pivots.append(c)
        r += 1
        rows = rows[:r] + [row for row in rows[r:] if any(row)]
    return rows[:r], pivots


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    irows, pivots = _int_echelon([_integer_row(r) for r in rows], ncols, reduced=True)
    out = []
    for row, c in zip(irows, pivots):
        pv = row[c]
        out.append([Fraction(v, pv) for v in row])
    return out, pivots


def det(m: Mat) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    _require_square(m, "det")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    a = []
    for i in range(n):
        row = m.row(i)
        den = lcm(*(v.denominator for v in row))
        scale *= den
        a.append([v.numerator * (den // v.denominator) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def rank(m: Mat) -> int:
    return len(_int_echelon([_integer_row(m.row(i)) for i in range(m.rows)], m.cols, reduced=False)[1])


def inverse(m: Mat) -> Mat:
    _require_square(m, "inverse")
    n = m.rows
    aug = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular", det=Fraction(0))
    return Mat._raw(n, n, tuple(v for r in rows for v in r[n:]))


def kernel_basis(m: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one vector per free column of the RREF."""
    rows, pivots = _rref([list(m.row(i)) for i in range(m.rows)], m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def charpoly(m: Mat) -> Poly:
    """det(xI - m) via the Faddeev-LeVerrier recurrence (valid in characteristic 0).

    Runs on the integer matrix D*m, whose characteristic polynomial has
    integer coefficients c_k; the coefficients for m are then c_k / D^(n-k).
    """
    _require_square(m, "charpoly")
    n = m.rows
    D = lcm(*(v.denominator for v in m.entries)) if n else 1
    a = [[v.numerator * (D // v.denominator) for v in m.row(i)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = _int_matmul(a, M)
        c = coeffs[n - k + 1]
        M = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
        tr = sum(x * y for i in range(n) for x, y in zip(a[i], (M[r][i] for r in range(n))))
        coeffs[n - k] = -tr // k
    return Poly(Fraction(c, D ** (n - k)) for k, c in enumerate(coeffs))


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def invariant_factors(m: Mat) -> list[Poly]:
    """Nontrivial invariant factors of xI - m, monic, each dividing the next.

    Computed from the Smith normal form of the characteristic matrix over
    Q[x] with Euclidean pivoting.
    """
    _require_square(m, "invariant_factors")
    n = m.rows
    x = Poly.x()
    a = [[(x if i == j else Poly()) - Poly.const(m[i, j]) for j in range(n)] for i in range(n)]
    diagonal = _smith_diagonal(a)
    return [p.monic() for p in diagonal if p.degree >= 1]


def _smith_diagonal(a: list[list[Poly]]) -> list[Poly]:
    n = len(a)
    ncols = len(a[0]) if n else 0
    out = []
    for t in range(min(n, ncols)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, ncols):
                    p = a[i][j]
                    if not p.is_zero() and (best is None or p.degree < best[0]):
                        best = (p.degree, i, j)
                        if best[0] == 0:
                            break
                if best is not None and best[0] == 0:
                    break
            if best is None:
                return out + [Poly()] * (min(n, ncols) - t)
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if not a[i][t].is_zero():
                    q, r = divmod(a[i][t], piv)
                    a[i] = [a[i][j] - q * a[t][j] if j >= t else a[i][j] for j in range(ncols)]
                    dirty = dirty or not r.is_zero()
            for j in range(t + 1, ncols):
                if not a[t][j].is_zero():
                    q, r = divmod(a[t][j], piv)
                    for i in range(t, n):
                        a[i][j] = a[i][j] - q * a[i][t]
                    dirty = dirty or not r.is_zero()
            if dirty:
                continue
            # pivot row/column cleared; enforce divisibility of the trailing block
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, ncols)
                 if not (a[i][j] % piv).is_zero()),
                None,
            )
            if bad is None:
                out.append(piv)
                break
            a[t] = [a[t][j] + a[bad][j] for j in range(ncols)]
    return out
