"""Integral lattices: constructors, basic invariants, orthogonal complements.

A lattice is a symmetric integer Gram matrix plus optional basis labels.
Root lattice constructors return the positive-definite Cartan matrices;
callers that want the negative-definite geometric version rescale by -1.
"""

from fractions import Fraction

from .matrices import (
    det_int,
    is_symmetric,
    kernel_basis,
    mat_mul,
    rank_int,
    signature_counts,
    smith_normal_form,
    transpose,
)


class IntegralLattice:
    """Immutable wrapper around a symmetric integer Gram matrix."""

    def __init__(self, gram, labels=None):
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError("label count does not match rank")
        self.gram = gram
        self.labels = labels

    @property
    def rank(self):
        return len(self.gram)

    def gram_rows(self):
        return [list(row) for row in self.gram]

    def entry(self, i, j):
        return self.gram[i][j]

    def determinant(self):
        return det_int(self.gram_rows())

    def is_nondegenerate(self):
        return self.determinant() != 0

    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def signature(self):
        """(n_plus, n_minus); zero pivots count as radical, not signature."""
        pos, neg, _ = signature_counts(self.gram_rows())
        return pos, neg

    def __eq__(self, other):
        return isinstance(other, IntegralLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return "IntegralLattice(rank=%d, det=%d)" % (self.rank, self.determinant())


def cartan_matrix(family, n):
    """Cartan matrix of type A_n (n>=1), D_n (n>=4) or E_n (n in 6,7,8).

    Node numbering: A_n is the path 1..n; D_n forks at node n-2 with legs
    n-1 and n; E_n has the branch node at position 4 carrying leg node 2,
    with the long arm 1-3-4-5-...-n.
    """
    family = family.upper()
    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(1, n)]
    elif family == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        edges = [(1, 3), (2, 4), (3, 4)] + [(i, i + 1) for i in range(4, n)]
    else:
        raise ValueError("unknown root family %r" % family)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = 2
    for a, b in edges:
        M[a - 1][b - 1] = -1
        M[b - 1][a - 1] = -1
    return M


def root_lattice(family, n):
    labels = ["%s%d" % (family.upper(), i + 1) for i in range(n)]
    return IntegralLattice(cartan_matrix(family, n), labels)


def hyperbolic_plane():
    return IntegralLattice([[0, 1], [1, 0]], ["e", "f"])


def rescale(L, k):
    k = int(k)
    if k == 0:
        raise ValueError("rescale factor must be nonzero")
    return IntegralLattice([[k * x for x in row] for row in L.gram], L.labels)


def direct_sum(*lattices):
    n = sum(L.rank for L in lattices)
    M = [[0] * n for _ in range(n)]
    labels = []
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                M[off + i][off + j] = L.gram[i][j]
        if L.labels is not None:
            labels.extend(L.labels)
        else:
            labels.extend("b%d" % (off + i) for i in range(L.rank))
        off += L.rank
    return IntegralLattice(M, labels)


def from_gram(M, labels=None):
    if not is_symmetric([list(r) for r in M]):
        raise ValueError("Gram matrix must be symmetric")
    return IntegralLattice(M, labels)


def make_lattice(kind, *args, **kwargs):
    """Dispatch constructor.

    kind in {"root", "hyperbolic", "rescale", "direct_sum", "from_gram"}.
    """
    if kind == "root":
        return root_lattice(*args, **kwargs)
    if kind == "hyperbolic":
        return hyperbolic_plane()
    if kind == "rescale":
        return rescale(*args, **kwargs)
    if kind == "direct_sum":
        return direct_sum(*args, **kwargs)
    if kind == "from_gram":
        return from_gram(*args, **kwargs)
    raise ValueError("unknown lattice kind %r" % kind)


def basic_invariants(L):
    """(rank, determinant, signature pair, parity string)."""
    parity = "even" if L.is_even() else "odd"
    return L.rank, L.determinant(), L.signature(), parity


def orthogonal_complement(sub_basis, L):
    """Gram of {x in L : x.s = 0 for all rows s of sub_basis}.

    The rows of sub_basis are coordinates in the basis of L. They must span
    a primitive sublattice; otherwise the caller should saturate first.
    """
    rows = [list(r) for r in sub_basis]
    if not rows:
        return IntegralLattice(L.gram, L.labels)
    if any(len(r) != L.rank for r in rows):
        raise ValueError("sub_basis width does not match lattice rank")
    if rank_int(rows) != len(rows):
        raise ValueError("sub_basis rows are dependent")
    _, D, _ = smith_normal_form(rows)
    if any(D[i][i] != 1 for i in range(len(rows))):
        raise ValueError("saturate input first")
    # pairing conditions: (sub_basis * gram) x = 0
    cond = mat_mul(rows, L.gram_rows())
    ker = kernel_basis(cond)
    basis = [list(col) for col in ker]  # rows = complement basis vectors
    gram = mat_mul(mat_mul(basis, L.gram_rows()), transpose(basis))
    return IntegralLattice(gram)
