"""Pencil intersection lattice pipeline.

assemble_gram builds the full intersection matrix ((A, B^T), (B, C)) with
A the negated Cartan block diagonal; galois_invariant folds Galois orbits
by summing their members; radical_quotient removes the kernel; build_LS
chains the three and checks the rank count; verify_family compares the
computed discriminant data against the printed expectations and runs the
duality check against the Picard lattice.
"""

from ..lattice import (
    IntegralLattice,
    direct_sum,
    discriminant_group,
    dn_dual_verify,
    forms_equivalent,
    hnf_rows,
    hyperbolic_plane,
    mat_mul,
    rank_int,
    smith_normal_form,
    transpose,
)
from .config import LatticeReport, PencilConfig


class RankMismatch(ValueError):
    def __init__(self, computed, expected):
        super().__init__(
            "invariant lattice rank %d, expected %d" % (computed, expected)
        )
        self.computed = computed
        self.expected = expected


def assemble_gram(cfg):
    """Full symmetric intersection matrix and its generator labels."""
    blocks = [s.cartan() for s in cfg.singularities]
    exc = sum(len(b) for b in blocks)
    n = exc + len(cfg.curve_labels)
    M = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        r = len(b)
        for i in range(r):
            for j in range(r):
                M[off + i][off + j] = -b[i][j]
        off += r
    for ci, row in enumerate(cfg.mixed_B):
        for ej, v in enumerate(row):
            M[exc + ci][ej] = v
            M[ej][exc + ci] = v
    for i, row in enumerate(cfg.mixed_C):
        for j, v in enumerate(row):
            M[exc + i][exc + j] = v
    return M, cfg.generator_labels()


def galois_invariant(M, labels, orbits):
    """Gram matrix on the orbit-sum generators.

    Each orbit contributes one generator equal to the sum of its members;
    singleton orbits pass their generator through unchanged.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    for orbit in orbits:
        for member in orbit:
            if member not in index:
                raise ValueError("orbit references unknown label %r" % member)
    S = []
    new_labels = []
    for orbit in orbits:
        row = [0] * len(labels)
        for member in orbit:
            row[index[member]] = 1
        S.append(row)
        new_labels.append("+".join(orbit))
    folded = mat_mul(mat_mul(S, M), transpose(S))
    return folded, new_labels


def radical_quotient(M):
    """Nondegenerate Gram on a saturated complement of the radical."""
    n = len(M)
    for i in range(n):
        for j in range(n):
            if M[i][j] != M[j][i]:
                raise ValueError("radical quotient needs a symmetric matrix")
    _, D, V = smith_normal_form(M)
    keep = [j for j in range(n) if D[j][j] != 0]
    if len(keep) == n:
        return IntegralLattice(M)
    # kernel columns of V are the zero Smith pivots; the remaining columns
    # descend to a saturated basis of the quotient lattice
    basis = [[V[i][j] for i in range(n)] for j in keep]
    # Smith transforms can carry huge coordinates; re-pick the same row
    # span in Hermite form so the quotient Gram stays small
    basis = hnf_rows(basis)
    gram = mat_mul(mat_mul(basis, M), transpose(basis))
    assert rank_int(gram) == len(gram) == len(keep)
    return IntegralLattice(gram)


def build_LS(cfg):
    """Invariant-cycle lattice of the family; checks rank = 20 - rank Pic."""
    M, labels = assemble_gram(cfg)
    folded, _ = galois_invariant(M, labels, cfg.galois_orbits)
    L = radical_quotient(folded)
    expected_rank = 20 - cfg.pic.rank
    if L.rank != expected_rank:
        raise RankMismatch(L.rank, expected_rank)
    return L


def verify_family(cfg):
    """Run the full pipeline for one family and collect every sub-check."""
    checks = {}
    detail = {"family": cfg.family_id, "rank_expected": 20 - cfg.pic.rank}
    try:
        L = build_LS(cfg)
    except RankMismatch as exc:
        checks["rank"] = False
        detail["rank"] = exc.computed
        return LatticeReport(cfg.family_id, checks, detail)
    checks["rank"] = True
    detail["rank"] = L.rank

    q = discriminant_group(L)
    detail["factors"] = q.invariant_factors
    detail["q_values"] = q.quadratic

    if cfg.expected is not None:
        exp_form = cfg.expected.form()
        checks["expected_factors"] = (
            q.invariant_factors == exp_form.invariant_factors
        )
        checks["expected_form"] = forms_equivalent(q, exp_form)
        dual_exp = cfg.expected.dual_form()
        if dual_exp is not None:
            comp = direct_sum(hyperbolic_plane(), cfg.pic)
            checks["expected_dual_form"] = forms_equivalent(
                discriminant_group(comp), dual_exp
            )

    duality = dn_dual_verify(L, cfg.pic)
    for name, ok in duality.checks.items():
        checks["dn_" + name] = ok
    detail["dn"] = duality.detail
    return LatticeReport(cfg.family_id, checks, detail)
