"""Mutations and monomial changes of variables for Laurent polynomials.

A mutation along (m, g) regrades p by the weight w(v) = <m, v>, multiplies
the weight-i part by g^i, and requires the negative-weight parts to be
exactly divisible by the matching power of g. The factor's support must be
orthogonal to m, which makes the weight of g zero and the operation an
involution along (-m, g).
"""

from __future__ import annotations

from math import gcd

from ..lattice.matrices import det_int
from .poly import Laurent


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mutate(p, m, g):
    """Mutation of p along direction m with factor polynomial g.

    Raises ValueError (naming the failing weight) when some negative-weight
    part is not divisible by the required power of g.
    """
    m = tuple(m)
    if len(m) != p.n:
        raise ValueError("direction length must match the variable count")
    g0 = 0
    for x in m:
        g0 = gcd(g0, abs(x))
    if g0 != 1:
        raise ValueError("mutation direction must be primitive")
    g = p._coerce(g)
    if not g:
        raise ValueError("mutation factor must be nonzero")
    bad = [v for v in g.terms if _dot(m, v) != 0]
    if bad:
        raise ValueError(f"factor support {bad[0]} is not orthogonal to {m}")
    parts = {}
    for v, c in p.terms.items():
        parts.setdefault(_dot(m, v), {})[v] = c
    out = Laurent.zero(p.n)
    for i in sorted(parts):
        q = Laurent(p.n, parts[i])
        if i >= 0:
            out = out + q * g ** i
        else:
            d = q.div_exact(g ** (-i))
            if d is None:
                raise ValueError(f"not mutable along (m, g): weight {i} part "
                                 f"is not divisible by the factor")
            out = out + d
    return out


def monomial_transform(p, matrix, scalings=None):
    """Invertible monomial change of variables.

    The rows of ``matrix`` are the exponent vectors of the images of the
    variables: x_j -> scale_j * x^(row j). Requires |det| = 1. Scalings may
    be parameter monomials or (numerator, denominator) pairs of them; the
    transform raises if a coefficient fails to clear.
    """
    rows = [list(r) for r in matrix]
    if abs(det_int(rows)) != 1:
        raise ValueError("change of variables must be unimodular")
    # rows give variable images, so exponent vectors map through the transpose
    n = len(rows)
    A = [[rows[j][i] for j in range(n)] for i in range(n)]
    return p.substitute_monomial(A, scalings)


def mutate_triple(p, triple):
    """Composite mutation (M, f, N): monomial change M, mutation along the
    last variable with factor f, monomial change N.

    M and N act by their rows as variable images, matching
    monomial_transform. Calibrated against a published three-step chain;
    each step checks exact divisibility through mutate().
    """
    M, f, N = triple
    if p.n != 3:
        raise ValueError("mutation triples are three-variable operations")
    f = p._coerce(f)
    q = monomial_transform(p, M)
    q = mutate(q, (0, 0, 1), f)
    return monomial_transform(q, N)
