"""Builders for the toric Landau-Ginzburg models used by the verification
suite: del Pezzo degenerations, the two quadric charts, and their products
with a projective line.

The del Pezzo models grow from the degree-9 triangle by adding one boundary
exponent per blow-up parameter; the new term's coefficient is the product of
the coefficients at its two boundary-adjacent lattice points times the fresh
parameter. For degrees 5, 4, 3 a coefficient-modification pass rewrites each
long facet: with boundary coefficients c_0..c_k read along the facet, the
modified ones are the s-coefficients of c_0 * prod_j (c_{j-1} + c_j s)
divided by prod_j c_{j-1} (vertices stay fixed, interior points change).
"""

from __future__ import annotations

from .params import ParamPoly
from .poly import Laurent
from .polytopes import LatticePolytope, ccw_vertices

# boundary exponent and parameter index added at each blow-up step
_DP_CHAIN = [
    ((-1, 0), 2),
    ((0, -1), 3),
    ((1, 1), 4),
    ((-1, 1), 5),
    ((-1, -2), 6),
    ((2, 1), 7),
]

_PRODUCT_FAMILIES = {
    "2.34": ("dp", 9, 2),
    "3.27": ("quadric-square", None, 3),
    "3.28": ("dp", 8, 3),
    "4.10": ("dp", 7, 4),
    "5.3": ("dp", 6, 5),
    "6.1": ("dp", 5, 6),
    "7.1": ("dp", 4, 7),
    "8.1": ("dp", 3, 8),
}


def _boundary_cycle(points):
    """Boundary lattice points of hull(points) in ccw cycle order."""
    P = LatticePolytope.hull(points)
    verts = ccw_vertices(P)
    cycle = []
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        d = (w[0] - v[0], w[1] - v[1])
        from math import gcd
        g = gcd(abs(d[0]), abs(d[1]))
        step = (d[0] // g, d[1] // g)
        for t in range(g):
            cycle.append((v[0] + t * step[0], v[1] + t * step[1]))
    return cycle


def _apply_marking(terms):
    """Facet-wise coefficient modification; vertices are left alone."""
    P = LatticePolytope.hull(terms)
    verts = ccw_vertices(P)
    from math import gcd
    out = dict(terms)
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        d = (w[0] - v[0], w[1] - v[1])
        g = gcd(abs(d[0]), abs(d[1]))
        if g < 2:
            continue
        step = (d[0] // g, d[1] // g)
        pts = [(v[0] + t * step[0], v[1] + t * step[1]) for t in range(g + 1)]
        c = [terms[p] for p in pts]
        denom = ParamPoly.const(1)
        for j in range(1, len(c)):
            denom = denom * c[j - 1]
        # R(s) = c0 * prod (c_{j-1} + c_j s), coefficients as a list in s
        R = [c[0]]
        for j in range(1, len(c)):
            nxt = [ParamPoly.const(0)] * (len(R) + 1)
            for deg, coef in enumerate(R):
                nxt[deg] = nxt[deg] + coef * c[j - 1]
                nxt[deg + 1] = nxt[deg + 1] + coef * c[j]
            R = nxt
        for t in range(1, g):
            modified = R[t].div_exact(denom)
            if modified is None:
                raise ValueError("marking step does not clear its denominator")
            out[pts[t]] = modified
    return out


def dp_model(degree):
    """Toric model of the degree-d del Pezzo degeneration chain, d in 3..9."""
    if not 3 <= degree <= 9:
        raise ValueError(f"no del Pezzo model for degree {degree}: "
                         f"supported degrees are 3..9")
    terms = {(1, 0): ParamPoly.const(1),
             (0, 1): ParamPoly.const(1),
             (-1, -1): ParamPoly.param(1)}
    for K, idx in _DP_CHAIN[:9 - degree]:
        cycle = _boundary_cycle(list(terms) + [K])
        if K not in cycle:
            raise ValueError(f"blow-up exponent {K} is not on the boundary")
        pos = cycle.index(K)
        left = cycle[pos - 1]
        right = cycle[(pos + 1) % len(cycle)]
        terms[K] = terms[left] * terms[right] * ParamPoly.param(idx)
    if degree <= 5:
        terms = _apply_marking(terms)
    return Laurent(2, terms)


def quadric_model(chart):
    """Toric model of a quadric surface degeneration.

    chart='square' is the product-of-lines chart, chart='cone' the quadratic
    cone chart (its marking already folded into the printed coefficients).
    """
    a1, a2 = ParamPoly.param(1), ParamPoly.param(2)
    if chart == "square":
        return Laurent(2, {(1, 0): 1, (-1, 0): a1, (0, 1): 1, (0, -1): a2})
    if chart == "cone":
        return Laurent(2, {(0, 1): 1, (-1, -1): a1, (0, -1): a1 + a2,
                           (1, -1): a2})
    raise ValueError(f"unknown quadric chart {chart!r}: use 'square' or 'cone'")


def _lift3(p2):
    return Laurent(3, {(i, j, 0): c for (i, j), c in p2.terms.items()})


def product_model(family):
    """Surface model times a line: f_S(x, y) + z + a_{k+1} z^{-1}."""
    if family not in _PRODUCT_FAMILIES:
        known = ", ".join(sorted(_PRODUCT_FAMILIES))
        raise ValueError(f"unknown product family {family!r}: known ids {known}")
    kind, degree, zidx = _PRODUCT_FAMILIES[family]
    f = dp_model(degree) if kind == "dp" else quadric_model("square")
    out = _lift3(f)
    out = out + Laurent.monomial(3, (0, 0, 1)) \
              + Laurent(3, {(0, 0, -1): ParamPoly.param(zidx)})
    return out


def lg_constructor(target):
    """Dispatch to a model builder by target name.

    'dp3'..'dp9', 'quadric-square', 'quadric-cone', or a product family id
    like '6.1'.
    """
    target = str(target).strip()
    if target.startswith("dp"):
        try:
            degree = int(target[2:])
        except ValueError:
            raise ValueError(f"bad del Pezzo target {target!r}") from None
        return dp_model(degree)
    if target.startswith("quadric-"):
        return quadric_model(target[len("quadric-"):])
    if target in _PRODUCT_FAMILIES:
        return product_model(target)
    raise ValueError(f"unknown construction target {target!r}")
