"""Intersection lattices of anticanonical pencils with prescribed singular fibers."""

from .config import ExpectedData, LatticeReport, PencilConfig, SingularPoint
from .pipeline import (
    RankMismatch,
    assemble_gram,
    build_LS,
    galois_invariant,
    radical_quotient,
    verify_family,
)

__all__ = [
    "ExpectedData",
    "LatticeReport",
    "PencilConfig",
    "SingularPoint",
    "RankMismatch",
    "assemble_gram",
    "build_LS",
    "galois_invariant",
    "radical_quotient",
    "verify_family",
]
