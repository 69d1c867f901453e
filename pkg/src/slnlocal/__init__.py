"""Exact computations with local automorphisms of sl_n over the rationals."""

from .autgroup import (
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
from .counterexample import DeltaAlpha, build_delta_alpha, refute_delta_alpha, verify_identities
from .exactmat import Mat, Poly, charpoly, det, inverse, invariant_factors, kernel_basis, rank
from .localcheck import (
    certify_on_points,
    det_preserving_sl2,
    point_witness,
    refute_search,
    sl2_classify,
)
from .simwit import is_similar, similarity_witness, verify_witness
from .slnlib import SlElement, basis, bracket, to_coords, to_matrix, trace_form

__all__ = [
    "ANTI_AUTOMORPHISM",
    "AUTOMORPHISM",
    "NEITHER",
    "LinMap",
    "SignedAuto",
    "anti",
    "apply",
    "check_bracket_morphism",
    "compose",
    "induced_matrix",
    "inner",
    "inverse_auto",
    "neg_inner",
    "outer",
    "recognize",
    "DeltaAlpha",
    "build_delta_alpha",
    "refute_delta_alpha",
    "verify_identities",
    "Mat",
    "Poly",
    "charpoly",
    "det",
    "inverse",
    "invariant_factors",
    "kernel_basis",
    "rank",
    "certify_on_points",
    "det_preserving_sl2",
    "point_witness",
    "refute_search",
    "sl2_classify",
    "is_similar",
    "similarity_witness",
    "verify_witness",
    "SlElement",
    "basis",
    "bracket",
    "to_coords",
    "to_matrix",
    "trace_form",
]

__version__ = "0.1.0"
