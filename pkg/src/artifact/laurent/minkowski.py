"""Lattice Minkowski decompositions of polygons and the induced
factorization tests for face polynomials.

A decomposition of a face delta is an unordered list of pairs (delta_i, n_i)
with delta = sum n_i delta_i as polytopes AND delta cap M equal to the
corresponding iterated point-set sum (the lattice condition). Entries are
multiset entries: {(sigma, 2)} and {(sigma, 1), (sigma, 1)} are different
data. Only dimensions <= 2 are supported, which covers facets of reflexive
3-polytopes and edges of polygons.
"""

from __future__ import annotations

from itertools import combinations, product

from .newton import dual_and_reflexive, face_polynomial, newton_polytope
from .params import ParamPoly
from .poly import Laurent
from .polytopes import (
    Face,
    LatticePolytope,
    chart_lift,
    chart_project,
    face_chart,
    minkowski_sum_points,
    polygon_edges,
)


def _as_polytope(obj):
    if isinstance(obj, Face):
        return obj.as_polytope()
    if isinstance(obj, LatticePolytope):
        return obj
    raise TypeError("expected a Face or LatticePolytope")


def _chart_of(poly):
    """Map a d-dimensional polytope into Z^d via a saturated chart."""
    origin, basis = face_chart(poly)
    flat = LatticePolytope.hull([chart_project(origin, basis, v)
                                 for v in poly.vertices])
    return origin, basis, flat


def _lift_polytope(origin, basis, flat):
    return LatticePolytope.hull([chart_lift(origin, basis, v)
                                 for v in flat.vertices]).normalized()


def _mink_sum(P, Q):
    return LatticePolytope.hull([tuple(a + b for a, b in zip(p, q))
                                 for p in P.vertices for q in Q.vertices])


def _polygon_shapes(dirs, caps):
    """Closed sub-edge-length vectors: 0 <= l_d <= cap_d, sum l_d * d = 0."""
    shapes = []
    for combo in product(*[range(c + 1) for c in caps]):
        if not any(combo):
            continue
        sx = sum(l * d[0] for l, d in zip(combo, dirs))
        sy = sum(l * d[1] for l, d in zip(combo, dirs))
        if sx == 0 and sy == 0:
            shapes.append(combo)
    return shapes


def _shape_polytope(shape, dirs):
    """Walk the chosen edge vectors in ccw order; hull of the path."""
    pts = [(0, 0)]
    cur = (0, 0)
    for l, d in zip(shape, dirs):
        for _ in range(l):
            cur = (cur[0] + d[0], cur[1] + d[1])
            pts.append(cur)
    return LatticePolytope.hull(pts).normalized()


def _pair_multisets(shapes, target):
    """Multisets of ((shape, n), count) with sum count*n*shape = target."""
    k = len(target)
    pairs = []
    for si, shape in enumerate(shapes):
        cap = min(target[i] // shape[i] for i in range(k) if shape[i])
        for n in range(1, cap + 1):
            pairs.append((si, n))
    out = []

    def rec(idx, remaining, chosen):
        if not any(remaining):
            out.append(tuple(chosen))
            return
        if idx == len(pairs):
            return
        si, n = pairs[idx]
        shape = shapes[si]
        cap = min(remaining[i] // (n * shape[i]) for i in range(k) if shape[i])
        for count in range(cap, 0, -1):
            rem = tuple(remaining[i] - count * n * shape[i] for i in range(k))
            rec(idx + 1, rem, chosen + [(si, n, count)])
        rec(idx + 1, remaining, chosen)

    rec(0, tuple(target), [])
    return out


def _lattice_condition(flat, entries):
    """delta cap M must equal the iterated point-set sum of the summands."""
    target = flat.normalized().lattice_points()
    acc = {(0,) * flat.n}
    for sigma, n in entries:
        pts = sigma.lattice_points()
        for _ in range(n):
            acc = minkowski_sum_points(acc, pts)
    return sorted(acc) == sorted(target)


def minkowski_decompositions(obj):
    """All lattice Minkowski decompositions of a polygon or segment.

    Returns a list of tuples of (summand, multiplicity) pairs, summands
    translation-normalized in the ambient lattice, trivial decomposition
    included. Raises for dimension 3 or higher: only facets of reflexive
    3-polytopes (and lower faces) are supported.
    """
    poly = _as_polytope(obj)
    if poly.dim > 2:
        raise ValueError("only facets supported: dimension must be at most 2")
    if poly.dim == 0:
        return [((poly.normalized(), 1),)]
    origin, basis, flat = _chart_of(poly)
    if flat.dim == 1:
        L = (max(v[0] for v in flat.vertices)
             - min(v[0] for v in flat.vertices))
        shapes = [(l,) for l in range(1, L + 1)]
        target = (L,)
        flat_of_shape = {s: LatticePolytope.hull([(0,), (s[0],)]) for s in shapes}
    else:
        edges = polygon_edges(flat)
        dirs = [d for _, d, _ in edges]
        caps = [l for _, _, l in edges]
        shapes = _polygon_shapes(dirs, caps)
        target = tuple(caps)
        flat_of_shape = {s: _shape_polytope(s, dirs) for s in shapes}
    decomps = {}
    for multiset in _pair_multisets(shapes, target):
        entries = []
        for si, n, count in multiset:
            entries.extend([(flat_of_shape[shapes[si]], n)] * count)
        if not _lattice_condition(flat, entries):
            continue
        lifted = tuple(sorted(((_lift_polytope(origin, basis, s), n)
                               for s, n in entries),
                              key=lambda e: (e[0].vertices, e[1])))
        key = tuple((e[0].vertices, e[1]) for e in lifted)
        decomps.setdefault(key, lifted)
    return [decomps[k] for k in sorted(decomps)]


def refines(coarse, fine):
    """Whether `coarse` refines `fine` per the partition condition.

    Both are decompositions of the same face: lists of (summand, n) pairs.
    True when the entries of `coarse` split into nonempty blocks, one per
    entry (delta_j, n_j) of `fine`, with n_j dividing every multiplicity m_i
    in its block and sum (m_i / n_j) sigma_i = delta_j up to translation.
    """
    fine = list(fine)
    coarse = list(coarse)
    if not fine:
        return not coarse

    def block_ok(indices, j):
        delta_j, n_j = fine[j]
        if not indices:
            return False
        total = None
        for i in indices:
            sigma, m = coarse[i]
            if m % n_j:
                return False
            piece = sigma.dilate(m // n_j)
            total = piece if total is None else _mink_sum(total, piece)
        return total.normalized() == _as_polytope(delta_j).normalized()

    def rec(j, remaining):
        if j == len(fine) - 1:
            return block_ok(remaining, j)
        for size in range(1, len(remaining) - (len(fine) - j - 1) + 1):
            for block in combinations(remaining, size):
                if block_ok(list(block), j):
                    rest = [i for i in remaining if i not in block]
                    if rec(j + 1, rest):
                        return True
        return False

    return rec(0, list(range(len(coarse))))


def _perms3(v):
    a, b, c = v
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def _inv2(A):
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    return [[A[1][1] // det, -A[0][1] // det],
            [-A[1][0] // det, A[0][0] // det]]


def _classify_summand(sigma):
    """('segment', length) or ('triangle', n, std->ambient map) or None.

    Admissible Minkowski-polynomial summands are unit segments and lattice
    triangles unimodular-affine equivalent to {(0,0), (1,0), (0,n)}.
    """
    if sigma.dim == 1:
        pts = sigma.lattice_points()
        return ("segment", len(pts) - 1)
    if sigma.dim != 2 or len(sigma.vertices) != 3:
        return None
    origin, basis, flat = _chart_of(sigma)
    verts = list(flat.vertices)
    for perm in _perms3(verts):
        d1 = (perm[1][0] - perm[0][0], perm[1][1] - perm[0][1])
        d2 = (perm[2][0] - perm[0][0], perm[2][1] - perm[0][1])
        det = d1[0] * d2[1] - d1[1] * d2[0]
        n = abs(det)
        if n == 0:
            continue
        # solve A [d1 d2] = [[1,0],[0,n]]: A = [[1,0],[0,n]] adj / det
        adj = [[d2[1], -d2[0]], [-d1[1], d1[0]]]
        num = [adj[0], [n * adj[1][0], n * adj[1][1]]]
        if any(x % det for row in num for x in row):
            continue
        A = [[x // det for x in row] for row in num]
        Ainv = _inv2(A)

        def to_ambient(q, base=perm[0], Ai=Ainv):
            chart_pt = (base[0] + Ai[0][0] * q[0] + Ai[0][1] * q[1],
                        base[1] + Ai[1][0] * q[0] + Ai[1][1] * q[1])
            return chart_lift(origin, basis, chart_pt)

        return ("triangle", n, to_ambient)
    return None


def _binomial(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _factor_for(sigma, nvars):
    """Normal-form factor with Newton polytope sigma, or None.

    Unit segment: 1 + x^d. Admissible triangle: transport of (1+y)^n + x.
    The transported coefficients do not depend on the identification chosen,
    because the standard triangle's lattice symmetries fix the polynomial.
    """
    kind = _classify_summand(sigma)
    if kind is None:
        return None
    if kind[0] == "segment":
        if kind[1] != 1:
            return None
        a, b = sigma.vertices
        return Laurent(nvars, {a: ParamPoly.const(1), b: ParamPoly.const(1)})
    _, n, to_ambient = kind
    terms = {to_ambient((1, 0)): ParamPoly.const(1)}
    for j in range(n + 1):
        k = to_ambient((0, j))
        terms[k] = terms.get(k, ParamPoly.const(0)) + _binomial(n, j)
    return Laurent(nvars, terms)


def product_matches(p_face, factors_with_mult):
    """The monomial shift nu with p_face == prod h_i^{n_i} * x^nu, or None."""
    q = Laurent.const(p_face.n, 1)
    for h, n in factors_with_mult:
        q = q * h ** n
    if not q.terms:
        return None
    nu = tuple(a - b for a, b in zip(p_face.min_exponents(),
                                     q.min_exponents()))
    if p_face == q * Laurent.monomial(p_face.n, nu):
        return nu
    return None


def is_minkowski_polynomial(p):
    """Decide whether p is a Minkowski polynomial, with a witness.

    Needs a reflexive Newton polytope. Every facet polynomial must factor,
    up to a monomial, into normal-form summand factors (1 + x^d for unit
    segments, transported (1+y)^n + x for standard triangles) raised to the
    decomposition multiplicities. Facet factorizations restrict to the lower
    faces, so checking facets settles every face.

    Returns (True, {facet normal: witness}) or (False, reason).
    """
    P = newton_polytope(p)
    ok, why = dual_and_reflexive(P)
    if not ok:
        return False, f"Newton polytope is not reflexive: {why}"
    witnesses = {}
    for face in P.faces(P.n - 1):
        p_face = face_polynomial(p, face)
        normal = next(P.facets[i][0] for i in sorted(face.active))
        found = None
        for decomp in minkowski_decompositions(face):
            factors = []
            for sigma, n in decomp:
                h = _factor_for(sigma, p.n)
                if h is None:
                    factors = None
                    break
                factors.append((h, n))
            if factors is None:
                continue
            nu = product_matches(p_face, factors)
            if nu is not None:
                found = {"pairs": decomp,
                         "factors": [h for h, _ in factors],
                         "shift": nu}
                break
        if found is None:
            return False, (f"facet with normal {normal} admits no "
                           f"normal-form factorization")
        witnesses[normal] = found
    return True, witnesses


def verify_M_polynomial(p, datum, witness):
    """Check a claimed M-polynomial structure on p.

    datum: list of (face, pairs) with pairs a list of (summand, n);
    witness: parallel list of factor lists. For every entry: the dilated
    summands must Minkowski-sum to the face, the lattice condition must
    hold, each factor's Newton polytope must be its summand up to
    translation, and the face polynomial must equal the product of factor
    powers times a monomial.
    """
    datum = list(datum)
    witness = list(witness)
    if len(datum) != len(witness):
        raise ValueError("datum and witness lengths differ")
    for (face, pairs), factors in zip(datum, witness):
        pairs = list(pairs)
        factors = list(factors)
        if len(pairs) != len(factors):
            raise ValueError("pairs and factors lengths differ")
        fp = _as_polytope(face)
        total = None
        for sigma, n in pairs:
            piece = sigma.dilate(n)
            total = piece if total is None else _mink_sum(total, piece)
        if total is None or total.normalized() != fp.normalized():
            return False
        origin, basis, flat = _chart_of(fp)
        flat_entries = []
        for sigma, n in pairs:
            anchor = fp.vertices[0]
            try:
                pts = [chart_project(origin, basis,
                                     tuple(v[i] - sigma.vertices[0][i] + anchor[i]
                                           for i in range(len(v))))
                       for v in sigma.vertices]
            except ValueError:
                return False
            flat_entries.append((LatticePolytope.hull(pts).normalized(), n))
        if not _lattice_condition(flat, flat_entries):
            return False
        p_face = face_polynomial(p, face)
        withmult = []
        for (sigma, n), h in zip(pairs, factors):
            if newton_polytope(h).normalized() != sigma.normalized():
                return False
            withmult.append((h, n))
        if product_matches(p_face, withmult) is None:
            return False
    return True


def square_binomial_factors(p, face):
    """Binomial witness for a parallelogram face of Newton(p), or None.

    The face polynomial splits as (c00 + c10 u) (1 + (c01/c00) v) * monomial
    exactly when the diagonal 2x2 minor c00*c11 - c10*c01 vanishes and the
    ratio divides in the parameter ring; None otherwise.
    """
    fp = _as_polytope(face)
    if fp.dim != 2 or len(fp.vertices) != 4:
        return None
    origin, basis, flat = _chart_of(fp)
    verts = sorted(flat.normalized().vertices)
    others = verts[1:]
    e = f = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        s = tuple(others[i][k] + others[j][k] for k in range(2))
        if s == others[3 - i - j]:
            e, f = others[i], others[j]
            break
    if e is None:
        return None
    p_face = face_polynomial(p, face)
    shift = flat.vertex_min()
    c = {}
    for corner in ((0, 0), (1, 0), (0, 1), (1, 1)):
        q = tuple(corner[0] * e[k] + corner[1] * f[k] + shift[k]
                  for k in range(2))
        amb = chart_lift(origin, basis, q)
        coeff = p_face.coefficient(amb)
        if not coeff:
            return None
        c[corner] = coeff
    if c[(0, 0)] * c[(1, 1)] != c[(1, 0)] * c[(0, 1)]:
        return None
    ratio = c[(0, 1)].div_exact(c[(0, 0)])
    if ratio is None:
        return None
    base = chart_lift(origin, basis, (0, 0))
    de = tuple(a - b for a, b in zip(chart_lift(origin, basis, e), base))
    df = tuple(a - b for a, b in zip(chart_lift(origin, basis, f), base))
    n = p.n
    seg1 = LatticePolytope.hull([(0,) * n, de]).normalized()
    seg2 = LatticePolytope.hull([(0,) * n, df]).normalized()
    h1 = _translate_to(Laurent(n, {(0,) * n: c[(0, 0)], de: c[(1, 0)]}), seg1)
    h2 = _translate_to(Laurent(n, {(0,) * n: ParamPoly.const(1), df: ratio}), seg2)
    return [(seg1, 1), (seg2, 1)], [h1, h2]


def _translate_to(h, target):
    nu = tuple(a - b for a, b in zip(target.vertex_min(),
                                     newton_polytope(h).vertex_min()))
    return h * Laurent.monomial(h.n, nu)
