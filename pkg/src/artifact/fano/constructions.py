"""Derived Picard-lattice constructions: blow-ups, bundles, products with a line."""

from ..lattice import (
    IntegralLattice,
    direct_sum,
    genus_equal,
    hyperbolic_plane,
    rescale,
    root_lattice,
)


class CurveOnFano:
    """A smooth curve to blow up: pairing vector against the basis, and its genus."""

    def __init__(self, pairing, genus):
        self.pairing = [int(v) for v in pairing]
        self.genus = int(genus)
        if self.genus < 0:
            raise ValueError("genus must be non-negative")


def blowup_extend(gram_X, curve):
    """Extend a pairing by an exceptional class.

    Old block unchanged, border = pairing of the curve with the old basis,
    corner = 2g - 2.
    """
    if isinstance(gram_X, IntegralLattice):
        old = [list(r) for r in gram_X.gram_rows()]
    else:
        old = [list(r) for r in gram_X]
    n = len(old)
    if len(curve.pairing) != n:
        raise ValueError("curve pairing vector length must match lattice rank")
    corner = 2 * curve.genus - 2
    rows = [old[i] + [curve.pairing[i]] for i in range(n)]
    rows.append(list(curve.pairing) + [corner])
    return IntegralLattice(rows)


def projective_bundle_gram(base, degrees):
    """Pairing of a split projective bundle in the basis (H, zeta).

    base "P2": P(O(d1) + O(d2)) over the plane; base "P1": the threefold
    P(O(d1) + O(d2) + O(d3)) over a line. Conventions: the rank-r relation
    is zeta^r = c1 zeta^(r-1) - c2 zeta^(r-2) + ..., and
    -K = r zeta - p*c1 - p*K_base.
    """
    ds = [int(d) for d in degrees]
    if base == "P2":
        if len(ds) != 2:
            raise ValueError("base P2 takes two degrees")
        s, pr = ds[0] + ds[1], ds[0] * ds[1]
        # H^2 zeta = 1; zeta^2 H = s; zeta^3 = s^2 - pr; -K = 2 zeta + (3 - s) H
        hh = 2 * 1
        hz = 2 * s + (3 - s) * 1
        zz = 2 * (s * s - pr) + (3 - s) * s
    elif base == "P1":
        if len(ds) != 3:
            raise ValueError("base P1 takes three degrees")
        s = sum(ds)
        # H^2 = 0 kills c2, c3; zeta^2 H = 1; zeta^3 = s; -K = 3 zeta + (2 - s) H
        hh = 0
        hz = 3
        zz = 3 * s + (2 - s)
    else:
        raise ValueError("unsupported base %r" % (base,))
    return IntegralLattice([[hh, hz], [hz, zz]], labels=["H", "zeta"])


def product_dp_lattice(d):
    """Pairing on an anticanonical surface in the product of a line with a
    blow-up of the plane in d points, basis (R_1..R_d, G, S)."""
    d = int(d)
    if not 1 <= d <= 8:
        raise ValueError("d out of range")
    n = d + 2
    M = [[0] * n for _ in range(n)]
    for i in range(d):
        M[i][i] = -2
        M[i][n - 1] = M[n - 1][i] = -1
    M[d][d] = 2
    M[d][n - 1] = M[n - 1][d] = 3
    M[n - 1][n - 1] = 0
    labels = ["R%d" % (i + 1) for i in range(d)] + ["G", "S"]
    return IntegralLattice(M, labels=labels)


_DP_ROOT = {
    1: [("E", 8)],
    2: [("E", 7)],
    3: [("E", 6)],
    4: [("D", 5)],
    5: [("A", 4)],
    6: [("A", 2), ("A", 1)],
}


def dp_root_lattice(degree):
    parts = [root_lattice(f, n) for f, n in _DP_ROOT[degree]]
    return parts[0] if len(parts) == 1 else direct_sum(*parts)


def dp_root_identification(degree):
    """Compare the degree-d product lattice with H + R_d(2), R_d the root
    lattice attached to a degree-d del Pezzo surface; returns a genus report."""
    degree = int(degree)
    if degree not in _DP_ROOT:
        raise ValueError("degree out of range")
    N = product_dp_lattice(9 - degree)
    # root_lattice builds the positive definite Cartan form; the root block
    # sits negative definite here, doubled
    model = direct_sum(hyperbolic_plane(), rescale(dp_root_lattice(degree), -2))
    ok = genus_equal(N, model)
    return {
        "degree": degree,
        "points": 9 - degree,
        "root": "+".join("%s%d" % p for p in _DP_ROOT[degree]),
        "product_det": N.determinant(),
        "model_det": model.determinant(),
        "genus_equal": ok,
    }
