"""Intersection pairings on Fano threefolds from triple-intersection data.

The pairing of two divisor classes is their triple product with the
anticanonical class.  A degree-2 cover pulls the same contraction back
with an extra factor of 2.
"""

from ..lattice import IntegralLattice


class TripleIntersectionData:
    """Symmetric trilinear form on a divisor basis plus the -K vector."""

    def __init__(self, labels, tensor, minus_k):
        self.labels = list(labels)
        n = len(self.labels)
        self.minus_k = [int(c) for c in minus_k]
        if len(self.minus_k) != n:
            raise ValueError("anticanonical vector length must match basis")
        self.tensor = [
            [[int(tensor[i][j][k]) for k in range(n)] for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    t = self.tensor[i][j][k]
                    for p in ((i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)):
                        if self.tensor[p[0]][p[1]][p[2]] != t:
                            raise ValueError("triple tensor must be symmetric")

    @property
    def rank(self):
        return len(self.labels)

    @classmethod
    def from_entries(cls, labels, entries, minus_k):
        """Build from a sparse {(i,j,k): value} dict, symmetrized."""
        n = len(labels)
        T = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in entries.items():
            for a, b, c in ((i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)):
                T[a][b][c] = int(v)
        return cls(labels, T, minus_k)


def _contract(data, weight):
    n = data.rank
    gram = [
        [
            weight * sum(data.minus_k[k] * data.tensor[i][j][k] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return IntegralLattice(gram, labels=data.labels)


def anticanonical_gram(data):
    """Gram(i,j) = sum_k (-K)_k T(i,j,k)."""
    return _contract(data, 1)


def double_cover_gram(data, minus_k_pullback=None):
    """Pairing on a double cover whose classes are pullbacks: twice the base contraction."""
    if minus_k_pullback is not None:
        data = TripleIntersectionData(data.labels, data.tensor, minus_k_pullback)
    return _contract(data, 2)
