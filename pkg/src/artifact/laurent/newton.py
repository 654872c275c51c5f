"""Newton polytopes, polar duals, and face restriction of Laurent polynomials."""

from __future__ import annotations

from .poly import Laurent
from .polytopes import Face, LatticePolytope


def newton_polytope(p):
    """Convex hull of the support; a constant gives the single point 0."""
    if isinstance(p, LatticePolytope):
        return p
    if not p.terms:
        raise ValueError("zero polynomial has no Newton polytope")
    return LatticePolytope.hull(p.support())


def dual_and_reflexive(P):
    """(True, dual vertex tuple) for a reflexive polytope, else (False, reason).

    The polar dual of a full-dimensional polytope with 0 strictly interior
    has the primitive facet normals as vertex candidates; it is a lattice
    polytope exactly when every facet has lattice distance one, and then the
    normals are precisely its vertices.
    """
    P = newton_polytope(P)
    if P.dim != P.n:
        return False, "polytope is not full-dimensional"
    bad = [c for _, c in P.facets if c <= 0]
    if bad:
        return False, "origin is not strictly interior"
    off = [(u, c) for u, c in P.facets if c != 1]
    if off:
        u, c = off[0]
        return False, f"facet {u} has lattice distance {c} from the origin"
    return True, tuple(sorted(u for u, _ in P.facets))


def face_polynomial(p, face):
    """Restriction of p to the terms whose exponents lie on the given face."""
    if isinstance(face, Face):
        member = face.contains
    elif isinstance(face, LatticePolytope):
        member = face.contains
    else:
        raise TypeError("face must be a Face or a LatticePolytope")
    kept = {k: c for k, c in p.terms.items() if member(k)}
    if not kept:
        raise ValueError("no terms of p lie on the face")
    return Laurent(p.n, kept)
