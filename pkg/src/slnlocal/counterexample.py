"""The map Delta_alpha on sl_n (n >= 3).

Delta_alpha moves four matrix units

    E_{1,n-1} -> E_{n1} + alpha E_{n,n-1}
    E_{1n}    -> E_{1,n-1}
    E_{n1}    -> E_{n,n-1}
    E_{n,n-1} -> E_{1n}

and fixes every other basis element, Cartan elements included. Each basis
element is sent to a conjugate of itself, yet the map is not a local
automorphism: Delta_alpha^2(E_{1,n-1}) = E_{n,n-1} + alpha E_{1n} has rank 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .autgroup import LinMap
from .exactmat import Mat, format_rational, inverse, parse_rational, rank
from .localcheck import NOT_LOCAL, Refutation, certify_on_points, refute_search
from .simwit import verify_witness
from .slnlib import SlElement, basis, dim, to_coords, to_matrix, unit

__all__ = [
    "DeltaAlpha",
    "build_delta_alpha",
    "delta_alpha_conjugators",
    "verify_identities",
    "DeltaAlphaRefutation",
    "refute_delta_alpha",
    "demo",
]


@dataclass(frozen=True)
class DeltaAlpha:
    n: int
    alpha: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"Delta_alpha needs n >= 3, got {self.n!r}")
        alpha = parse_rational(self.alpha)
        if alpha == 0:
            raise ValueError("alpha must be nonzero")
        object.__setattr__(self, "alpha", alpha)

    def moved(self) -> list[tuple[Mat, Mat]]:
        """(source, image) pairs for the four moved matrix units."""
        n, a = self.n, self.alpha
        E = lambda i, j: Mat.unit(n, i, j)  # noqa: E731
        return [
            (E(1, n - 1), E(n, 1) + E(n, n - 1).scale(a)),
            (E(1, n), E(1, n - 1)),
            (E(n, 1), E(n, n - 1)),
            (E(n, n - 1), E(1, n)),
        ]


def build_delta_alpha(spec: DeltaAlpha) -> LinMap:
    n = spec.n
    moves = {to_coords(src, n): to_coords(dst, n) for src, dst in spec.moved()}
    images = []
    for k in range(dim(n)):
        b = SlElement(n, tuple(Fraction(int(i == k)) for i in range(dim(n))))
        images.append(moves.get(b, b))
    return LinMap.from_images(n, images)


def delta_alpha_conjugators(spec: DeltaAlpha) -> tuple[Mat, Mat, Mat, Mat]:
    """T1..T4 with E T_i = T_i Delta_alpha(E) for the four moved units, in that order."""
    n, a = spec.n, spec.alpha
    I = Mat.identity(n)
    E = lambda i, j: Mat.unit(n, i, j)  # noqa: E731
    T1 = I + E(1, n) + E(n - 1, 1) + E(n - 1, n - 1).scale(a - 1) + E(n, n - 1) - E(n, n)
    T2 = I - E(n - 1, n - 1) - E(n, n) + E(n - 1, n) + E(n, n - 1)
    T3 = I - E(1, 1) + E(1, n - 1) + E(n - 1, 1) - E(n - 1, n - 1)
    T4 = I - E(1, 1) + E(1, n - 1) - E(n - 1, n - 1) + E(n - 1, n) + E(n, 1) - E(n, n)
    return T1, T2, T3, T4


def verify_identities(spec: DeltaAlpha) -> bool:
    """Check E T = T Delta(E), invertibility of T, and Delta(E) = T^-1 E T for each moved unit."""
    delta = build_delta_alpha(spec)
    n = spec.n
    for (src, dst), T in zip(spec.moved(), delta_alpha_conjugators(spec)):
        if not verify_witness(src, dst, T):
            return False
        if to_matrix(delta(to_coords(src, n))) != inverse(T) @ src @ T:
            return False
    return True


@dataclass(frozen=True)
class DeltaAlphaRefutation:
    source: Mat
    square_image: Mat
    source_rank: int
    square_image_rank: int
    direct: Refutation | None

    @property
    def refuted(self) -> bool:
        # automorphisms preserve rank, and local automorphisms form a group
        by_rank = self.square_image_rank != self.source_rank
        return by_rank or self.direct is not None


def refute_delta_alpha(spec: DeltaAlpha, budget: int | None = None, seed: int = 0) -> DeltaAlphaRefutation:
    n = spec.n
    delta = build_delta_alpha(spec)
    src = unit(n, 1, n - 1)
    sq = to_matrix(delta(delta(src)))
    return DeltaAlphaRefutation(
        source=to_matrix(src),
        square_image=sq,
        source_rank=rank(to_matrix(src)),
        square_image_rank=rank(sq),
        direct=refute_search(delta, budget=budget, seed=seed),
    )


def demo(spec: DeltaAlpha, budget: int | None = None, seed: int = 0) -> dict:
    delta = build_delta_alpha(spec)
    n = spec.n
    basis_points = [SlElement(n, tuple(Fraction(int(i == k)) for i in range(dim(n)))) for k in range(len(basis(n)))]
    cert = certify_on_points(delta, basis_points, budget=budget, seed=seed)
    ref = refute_delta_alpha(spec, budget=budget, seed=seed)
    return {
        "n": n,
        "alpha": format_rational(spec.alpha),
        "identities_verified": verify_identities(spec),
        "basis_certified": len(cert.certificates) == len(basis_points),
        "rank_of_delta_squared_image": ref.square_image_rank,
        "direct_refutation_point": ref.direct.x.to_json() if ref.direct else None,
        "verdict": NOT_LOCAL if ref.refuted else "inconclusive",
    }
