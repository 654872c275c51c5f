"""Picard-lattice constructors for Fano threefolds and their hypersurfaces."""

from .constructions import (
    CurveOnFano,
    blowup_extend,
    dp_root_identification,
    dp_root_lattice,
    product_dp_lattice,
    projective_bundle_gram,
)
from .periods import (
    WEIGHTS_236,
    WEIGHTS_2356,
    modular_invariants_233,
    period_map_eval,
    period_weights,
    wp_equal,
)
from .triple import TripleIntersectionData, anticanonical_gram, double_cover_gram

__all__ = [
    "CurveOnFano",
    "TripleIntersectionData",
    "WEIGHTS_236",
    "WEIGHTS_2356",
    "anticanonical_gram",
    "blowup_extend",
    "double_cover_gram",
    "dp_root_identification",
    "dp_root_lattice",
    "modular_invariants_233",
    "period_map_eval",
    "period_weights",
    "product_dp_lattice",
    "projective_bundle_gram",
    "wp_equal",
]
