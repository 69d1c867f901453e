"""Signed automorphisms of sl_n and linear endomorphisms in coordinates.

A :class:`SignedAuto` is the map ``X -> sign * A^-1 X^t A`` where ``t`` is
either the identity or the transpose. The pairs (+1, id) and (-1, transpose)
are automorphisms, (-1, id) and (+1, transpose) anti-automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .exactmat import DimensionError, Mat, det, format_rational, inverse, kernel_basis
from .simwit import intertwiner_system, invertible_in_span
from .slnlib import SlElement, basis_matrices, dim, to_coords, to_matrix

__all__ = [
    "AUTOMORPHISM",
    "ANTI_AUTOMORPHISM",
    "NEITHER",
    "SignedAuto",
    "LinMap",
    "inner",
    "outer",
    "anti",
    "neg_inner",
    "apply",
    "compose",
    "inverse_auto",
    "induced_matrix",
    "check_bracket_morphism",
    "recognize",
]

AUTOMORPHISM = "automorphism"
ANTI_AUTOMORPHISM = "anti_automorphism"
NEITHER = "neither"

ID = "id"
TRANSPOSE = "transpose"


def _normalize(A: Mat) -> Mat:
    # conjugation is blind to scaling A; make the first nonzero entry 1
    lead = next(v for v in A.entries if v)
    return A if lead == 1 else A.scale(1 / lead)


@dataclass(frozen=True)
class SignedAuto:
    n: int
    sign: int
    twist: str
    A: Mat

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.twist not in (ID, TRANSPOSE):
            raise ValueError(f"twist must be 'id' or 'transpose', got {self.twist!r}")
        if self.A.shape != (self.n, self.n):
            raise DimensionError(f"A must be {self.n}x{self.n}, got {self.A.rows}x{self.A.cols}")
        if det(self.A) == 0:
            raise ValueError("A must be invertible")
        object.__setattr__(self, "A", _normalize(self.A))

    @property
    def is_automorphism(self) -> bool:
        return (self.sign == 1) == (self.twist == ID)

    @property
    def kind(self) -> str:
        return AUTOMORPHISM if self.is_automorphism else ANTI_AUTOMORPHISM

    def negated(self) -> "SignedAuto":
        return SignedAuto(self.n, -self.sign, self.twist, self.A)

    def apply_matrix(self, X: Mat) -> Mat:
        Xt = X.T if self.twist == TRANSPOSE else X
        out = _inverse_cached(self.A) @ Xt @ self.A
        return -out if self.sign == -1 else out

    def __call__(self, x: SlElement) -> SlElement:
        return apply(self, x)

    def to_json(self) -> dict:
        return {"n": self.n, "sign": self.sign, "twist": self.twist, "A": self.A.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SignedAuto":
        return cls(int(data["n"]), int(data["sign"]), data["twist"], Mat.from_json(data["A"]))


@lru_cache(maxsize=1024)
def _inverse_cached(A: Mat) -> Mat:
    return inverse(A)


def inner(A: Mat) -> SignedAuto:
    """X -> A^-1 X A."""
    return SignedAuto(A.rows, 1, ID, A)


def outer(A: Mat) -> SignedAuto:
    """X -> -A^-1 X^T A."""
    return SignedAuto(A.rows, -1, TRANSPOSE, A)


def anti(A: Mat) -> SignedAuto:
    """X -> A^-1 X^T A."""
    return SignedAuto(A.rows, 1, TRANSPOSE, A)


def neg_inner(A: Mat) -> SignedAuto:
    """X -> -A^-1 X A."""
    return SignedAuto(A.rows, -1, ID, A)


def apply(phi: SignedAuto, x: SlElement) -> SlElement:
    if phi.n != x.n:
        raise DimensionError(f"map on sl_{phi.n} applied to an element of sl_{x.n}")
    return to_coords(phi.apply_matrix(to_matrix(x)), x.n)


def compose(phi: SignedAuto, psi: SignedAuto) -> SignedAuto:
    """The signed automorphism x -> phi(psi(x))."""
    if phi.n != psi.n:
        raise DimensionError(f"sl_{phi.n} vs sl_{psi.n}")
    sign = phi.sign * psi.sign
    if phi.twist == ID:
        A = psi.A @ phi.A
        twist = psi.twist
    else:
        # (B^-1 Y B)^T = B^T Y^T B^-T
        A = inverse(psi.A.T) @ phi.A
        twist = TRANSPOSE if psi.twist == ID else ID
    return SignedAuto(phi.n, sign, twist, A)


def inverse_auto(phi: SignedAuto) -> SignedAuto:
    if phi.twist == ID:
        return SignedAuto(phi.n, phi.sign, ID, inverse(phi.A))
    return SignedAuto(phi.n, phi.sign, TRANSPOSE, phi.A.T)


@dataclass(frozen=True)
class LinMap:
    """Linear endomorphism of sl_n; column j holds the coordinates of the image of basis j."""

    n: int
    M: Mat

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"sl_n needs n >= 2, got {self.n!r}")
        d = dim(self.n)
        if self.M.shape != (d, d):
            raise DimensionError(f"sl_{self.n} map needs a {d}x{d} matrix, got {self.M.rows}x{self.M.cols}")

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(n, Mat.identity(dim(n)))

    @classmethod
    def from_images(cls, n: int, images: list[SlElement]) -> "LinMap":
        d = dim(n)
        if len(images) != d:
            raise DimensionError(f"need {d} images, got {len(images)}")
        return cls(n, Mat.from_rows([[images[j].coords[i] for j in range(d)] for i in range(d)]))

    @property
    def d(self) -> int:
        return self.M.rows

    def __call__(self, x: SlElement) -> SlElement:
        if x.n != self.n:
            raise DimensionError(f"map on sl_{self.n} applied to an element of sl_{x.n}")
        c = x.coords
        return SlElement(self.n, tuple(sum((a * b for a, b in zip(self.M.row(i), c) if a and b), Fraction(0))
                                       for i in range(self.d)))

    def images(self) -> list[SlElement]:
        return [SlElement(self.n, self.M.column(j)) for j in range(self.d)]

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if self.n != other.n:
            raise DimensionError(f"sl_{self.n} vs sl_{other.n}")
        return LinMap(self.n, self.M @ other.M)

    def scale(self, c) -> "LinMap":
        return LinMap(self.n, self.M.scale(c))

    def inverse(self) -> "LinMap":
        return LinMap(self.n, inverse(self.M))

    def to_json(self) -> dict:
        return {"n": self.n, "M": self.M.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "LinMap":
        if not isinstance(data, dict) or "n" not in data or "M" not in data:
            raise ValueError("LinMap JSON needs 'n' and 'M'")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise ValueError(f"invalid n: {n!r}")
        return cls(n, Mat.from_json(data["M"]))


def induced_matrix(phi: SignedAuto) -> LinMap:
    return LinMap.from_images(phi.n, [to_coords(phi.apply_matrix(b), phi.n) for b in basis_matrices(phi.n)])


@lru_cache(maxsize=None)
def _structure_constants(n: int) -> tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]:
    """For i < j: the nonzero coordinates of [b_i, b_j] (integers in this basis)."""
    bs = basis_matrices(n)
    out = []
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            c = to_coords(bs[i] @ bs[j] - bs[j] @ bs[i], n).coords
            out.append((i, j, tuple((k, int(v)) for k, v in enumerate(c) if v)))
    return tuple(out)


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def check_bracket_morphism(L: LinMap) -> str:
    """Classify L as automorphism, anti-automorphism or neither.

    Checks invertibility and the bracket identity on every basis pair,
    which is complete by bilinearity. Image matrices are scaled to integers
    by a common denominator D, so both sides of the identity carry a factor D^2.
    """
    if det(L.M) == 0:
        return NEITHER
    n = L.n
    images = [to_matrix(y) for y in L.images()]
    D = lcm(*(v.denominator for m in images for v in m.entries))
    Z = [[[int(m[i, j] * D) for j in range(n)] for i in range(n)] for m in images]
    is_auto = True
    is_anti = True
    for i, j, consts in _structure_constants(n):
        zi_zj = _int_matmul(Z[i], Z[j])
        zj_zi = _int_matmul(Z[j], Z[i])
        comm = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(zi_zj, zj_zi)]
        # D * L([b_i, b_j]) as a matrix, scaled once more by D
        rhs = [[0] * n for _ in range(n)]
        for k, c in consts:
            zk = Z[k]
            for r in range(n):
                row = rhs[r]
                for s in range(n):
                    if zk[r][s]:
                        row[s] += c * zk[r][s]
        for r in range(n):
            for s in range(n):
                target = rhs[r][s] * D
                if comm[r][s] != target:
                    is_auto = False
                if -comm[r][s] != target:
                    is_anti = False
        if not (is_auto or is_anti):
            return NEITHER
    if is_auto:
        return AUTOMORPHISM
    return ANTI_AUTOMORPHISM


def _candidate_forms(n: int, verdict: str) -> list[tuple[int, str]]:
    if verdict == AUTOMORPHISM:
        # for sl_2 every automorphism is a conjugation
        return [(1, ID)] if n == 2 else [(1, ID), (-1, TRANSPOSE)]
    if verdict == ANTI_AUTOMORPHISM:
        return [(-1, ID)] if n == 2 else [(-1, ID), (1, TRANSPOSE)]
    return []


def recognize(L: LinMap, budget: int | None = None, seed: int = 0) -> SignedAuto | None:
    """Recover (sign, twist, A) with induced matrix equal to L, or None."""
    verdict = check_bracket_morphism(L)
    n = L.n
    bs = basis_matrices(n)
    images = [to_matrix(y) for y in L.images()]
    for sign, twist in _candidate_forms(n, verdict):
        # L(b) = sign A^-1 b^t A   <=>   (sign b^t) A - A L(b) = 0
        pairs = [((b.T if twist == TRANSPOSE else b).scale(sign), y) for b, y in zip(bs, images)]
        kernel = [Mat._raw(n, n, tuple(v)) for v in kernel_basis(intertwiner_system(pairs))]
        A = invertible_in_span(kernel, budget=budget, seed=seed)
        if A is None:
            continue
        phi = SignedAuto(n, sign, twist, A)
        if induced_matrix(phi) == L:
            return phi
    return None


def describe(phi: SignedAuto) -> str:
    body = "X^T" if phi.twist == TRANSPOSE else "X"
    sign = "-" if phi.sign == -1 else ""
    rows = "; ".join(" ".join(format_rational(v) for v in phi.A.row(i)) for i in range(phi.n))
    return f"X -> {sign}A^-1 {body} A with A = [{rows}]"

