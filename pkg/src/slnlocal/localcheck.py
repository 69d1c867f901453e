"""Pointwise certification and refutation of local automorphisms.

A linear map D on sl_n is a local automorphism when every single x has some
automorphism phi_x with D(x) = phi_x(x). At a given x this is a similarity
question: D(x) must be conjugate to x (inner form) or, for n >= 3, to -x^T
(outer form). Certificates carry the conjugating matrix, refutations carry
the mismatching invariant factors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .autgroup import (
    ANTI_AUTOMORPHISM,
    AUTOMORPHISM,
    LinMap,
    SignedAuto,
    apply,
    check_bracket_morphism,
    inner,
    outer,
)
from .exactmat import DimensionError, Mat
from .simwit import (
    SimilarityWitness,
    WitnessSearchExhausted,
    cached_invariant_factors,
    is_similar,
    similarity_witness,
)
from .slnlib import SlElement, dim, to_matrix, trace_form

__all__ = [
    "CERTIFIED",
    "NOT_LOCAL",
    "INCONCLUSIVE",
    "DEFAULT_RANDOM_POINTS",
    "PointCertificate",
    "Refutation",
    "BudgetExhausted",
    "CertificationReport",
    "point_witness",
    "certify_on_points",
    "sl2_classify",
    "det_preserving_sl2",
    "search_points",
    "refutation_at",
    "refute_search",
]

CERTIFIED = "certified-on-set"
NOT_LOCAL = "not a local automorphism"
INCONCLUSIVE = "inconclusive"

DEFAULT_RANDOM_POINTS = 200
_RANDOM_COEFF = 3


@dataclass(frozen=True)
class PointCertificate:
    x: SlElement
    image: SlElement
    witness: SignedAuto
    similarity: SimilarityWitness

    def verify(self) -> bool:
        """Independent re-check: the witness is an automorphism form sending x to image."""
        ok_form = self.witness.is_automorphism and (self.x.n >= 3 or self.witness.twist == "id")
        return ok_form and apply(self.witness, self.x) == self.image and self.similarity.verify()

    def to_json(self) -> dict:
        return {
            "point": self.x.to_json(),
            "image": self.image.to_json(),
            "witness": self.witness.to_json(),
        }


@dataclass(frozen=True)
class Refutation:
    """No automorphism sends x to image; evidence maps each form to (invariants of candidate, of image)."""

    x: SlElement
    image: SlElement
    evidence: dict
    tier: str | None = None

    def to_json(self) -> dict:
        return {
            "point": self.x.to_json(),
            "image": self.image.to_json(),
            "evidence": {
                form: {
                    "candidate_invariant_factors": [p.to_json() for p in cand],
                    "image_invariant_factors": [p.to_json() for p in img],
                }
                for form, (cand, img) in self.evidence.items()
            },
        }


@dataclass(frozen=True)
class BudgetExhausted:
    x: SlElement
    image: SlElement


@dataclass
class CertificationReport:
    certificates: list[PointCertificate] = field(default_factory=list)
    refutations: list[Refutation] = field(default_factory=list)
    budget_exhausted: list[BudgetExhausted] = field(default_factory=list)
    seed: int = 0

    @property
    def verdict(self) -> str:
        if self.refutations:
            return NOT_LOCAL
        if self.budget_exhausted:
            return INCONCLUSIVE
        return CERTIFIED

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "certificates": [c.to_json() for c in self.certificates],
            "refutations": [r.to_json() for r in self.refutations],
            "budget_exhausted": [b.x.to_json() for b in self.budget_exhausted],
            "seed": self.seed,
        }


def _check_sizes(delta: LinMap, x: SlElement) -> None:
    if delta.n != x.n:
        raise DimensionError(f"map on sl_{delta.n} applied to an element of sl_{x.n}")


def _forms(n: int) -> list[str]:
    # sl_2 has only conjugations; n >= 3 adds X -> -A^-1 X^T A
    return ["inner"] if n == 2 else ["inner", "outer"]


def _candidate(form: str, Xm: Mat) -> Mat:
    return Xm if form == "inner" else (-Xm).T


def point_witness(delta: LinMap, x: SlElement, budget: int | None = None, seed: int = 0):
    """Certify, refute, or give up on the local condition at a single point."""
    _check_sizes(delta, x)
    image = delta(x)
    Xm, Y = to_matrix(x), to_matrix(image)
    evidence = {}
    exhausted = False
    for form in _forms(x.n):
        C = _candidate(form, Xm)
        try:
            w = similarity_witness(C, Y, budget=budget, seed=seed)
        except WitnessSearchExhausted:
            exhausted = True
            continue
        if w is None:
            evidence[form] = (cached_invariant_factors(C), cached_invariant_factors(Y))
            continue
        # C T = T Y  =>  Y = T^-1 C T; for the outer form C = -X^T
        phi = inner(w.T) if form == "inner" else outer(w.T)
        return PointCertificate(x, image, phi, SimilarityWitness(Xm if form == "inner" else C, Y, w.T))
    if exhausted:
        return BudgetExhausted(x, image)
    return Refutation(x, image, evidence)


def certify_on_points(delta: LinMap, points: Sequence[SlElement], budget: int | None = None,
                      seed: int = 0) -> CertificationReport:
    report = CertificationReport(seed=seed)
    for x in points:
        outcome = point_witness(delta, x, budget=budget, seed=seed)
        if isinstance(outcome, PointCertificate):
            report.certificates.append(outcome)
        elif isinstance(outcome, Refutation):
            report.refutations.append(outcome)
        else:
            report.budget_exhausted.append(outcome)
    return report


def _require_sl2(delta: LinMap) -> None:
    if delta.n != 2:
        raise ValueError(f"this check is specific to sl_2, got sl_{delta.n}")


def sl2_classify(delta: LinMap) -> str:
    """'automorphism', 'anti_automorphism' or 'not_local'; complete for sl_2."""
    _require_sl2(delta)
    verdict = check_bracket_morphism(delta)
    if verdict in (AUTOMORPHISM, ANTI_AUTOMORPHISM):
        return verdict
    return "not_local"


def det_preserving_sl2(delta: LinMap) -> bool:
    """True iff delta preserves the trace form on all basis pairs."""
    _require_sl2(delta)
    bs = [SlElement(2, tuple(Fraction(int(i == j)) for j in range(3))) for i in range(3)]
    imgs = [delta(b) for b in bs]
    return all(trace_form(imgs[i], imgs[j]) == trace_form(bs[i], bs[j])
               for i in range(3) for j in range(i, 3))


def search_points(n: int, budget: int | None = None, seed: int = 0) -> Iterator[tuple[str, SlElement]]:
    """Deterministic scan order: basis, two-term sums/differences, signed triples, seeded random.

    Negating a point never changes the outcome, so only one of x and -x is
    visited. ``budget`` caps the total number of points; ``None`` runs every
    deterministic tier plus ``DEFAULT_RANDOM_POINTS`` random draws.
    """
    d = dim(n)

    def unit_vec(terms):
        c = [Fraction(0)] * d
        for k, s in terms:
            c[k] = Fraction(s)
        return SlElement(n, tuple(c))

    def tiers():
        for k in range(d):
            yield "basis", unit_vec([(k, 1)])
        for i, j in itertools.combinations(range(d), 2):
            yield "pairs", unit_vec([(i, 1), (j, 1)])
            yield "pairs", unit_vec([(i, 1), (j, -1)])
        for i, j, k in itertools.combinations(range(d), 3):
            for s2, s3 in itertools.product((1, -1), repeat=2):
                yield "triples", unit_vec([(i, 1), (j, s2), (k, s3)])
        rng = random.Random(seed)
        draws = 0
        while budget is not None or draws < DEFAULT_RANDOM_POINTS:
            c = tuple(rng.randint(-_RANDOM_COEFF, _RANDOM_COEFF) for _ in range(d))
            if any(c):
                draws += 1
                yield "random", SlElement(n, c)

    it = tiers()
    if budget is not None:
        it = itertools.islice(it, budget)
    yield from it


def refutation_at(delta: LinMap, x: SlElement) -> Refutation | None:
    """Refutation at x if delta(x) is similar to no automorphism image of x, else None."""
    _check_sizes(delta, x)
    image = delta(x)
    Xm, Y = to_matrix(x), to_matrix(image)
    evidence = {}
    for form in _forms(x.n):
        C = _candidate(form, Xm)
        if is_similar(C, Y):
            return None
        evidence[form] = (cached_invariant_factors(C), cached_invariant_factors(Y))
    return Refutation(x, image, evidence)


def refute_search(delta: LinMap, budget: int | None = None, seed: int = 0) -> Refutation | None:
    """First refutation point in scan order, or None (inconclusive, not a certification)."""
    for tier, x in search_points(delta.n, budget=budget, seed=seed):
        r = refutation_at(delta, x)
        if r is not None:
            return Refutation(r.x, r.image, r.evidence, tier)
    return None
