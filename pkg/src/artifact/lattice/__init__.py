"""Exact integral-lattice algebra: constructors, invariants, discriminant forms."""

from .matrices import (
    det_int,
    hnf_rows,
    identity,
    inverse_rational,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank_int,
    signature_counts,
    smith_normal_form,
    snf_diagonal,
    transpose,
)
from .lattices import (
    IntegralLattice,
    basic_invariants,
    cartan_matrix,
    direct_sum,
    from_gram,
    hyperbolic_plane,
    make_lattice,
    orthogonal_complement,
    rescale,
    root_lattice,
)
from .forms import (
    FiniteQuadraticForm,
    GenusSymbol,
    discriminant_group,
    forms_equivalent,
    genus_equal,
    negate_form,
)
from .embeddings import (
    EXISTS,
    EXISTS_UNIQUE,
    INCONCLUSIVE,
    DualityReport,
    dn_dual_verify,
    embedding_criteria,
)
from .textio import (
    format_rational,
    load_lattice,
    loads_lattice,
    parse_int_rows,
    parse_rational,
    parse_rational_rows,
)

__all__ = [
    "IntegralLattice",
    "FiniteQuadraticForm",
    "GenusSymbol",
    "DualityReport",
    "basic_invariants",
    "cartan_matrix",
    "det_int",
    "direct_sum",
    "discriminant_group",
    "dn_dual_verify",
    "embedding_criteria",
    "EXISTS",
    "EXISTS_UNIQUE",
    "INCONCLUSIVE",
    "forms_equivalent",
    "format_rational",
    "from_gram",
    "genus_equal",
    "hnf_rows",
    "hyperbolic_plane",
    "identity",
    "inverse_rational",
    "kernel_basis",
    "load_lattice",
    "loads_lattice",
    "make_lattice",
    "mat_mul",
    "mat_vec",
    "negate_form",
    "orthogonal_complement",
    "parse_int_rows",
    "parse_rational",
    "parse_rational_rows",
    "rank_int",
    "rescale",
    "root_lattice",
    "signature_counts",
    "smith_normal_form",
    "snf_diagonal",
    "transpose",
]
