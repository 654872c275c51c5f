"""Exact lattice polytopes in ambient dimension at most three.

Brute-force convex hulls: candidate supporting hyperplanes come from point
pairs/triples, facets are the ones whose touching set has the right affine
dimension. Everything stays in integers/Fractions; sizes here are tiny
(Newton polytopes of model polynomials), so O(points^3) is fine.

Facets are stored as (u, c) with u a primitive inward normal and
u . x + c >= 0 on the polytope.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import gcd

from ..lattice.matrices import inverse_rational, rank_int, smith_normal_form


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    return tuple(x // g for x in v)


def affine_dim(points):
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    diffs = [list(_sub(p, base)) for p in pts[1:]]
    if not diffs:
        return 0
    return rank_int(diffs)


def saturated_row_basis(rows):
    """Z-basis of (row span over Q) intersected with Z^n.

    From U A V = D: the row space of A equals the span of the first r rows
    of V^-1 scaled by the invariant factors, so those rows give the
    saturation.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    _, D, V = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i] != 0)
    Vinv = inverse_rational(V)
    return [tuple(int(x) for x in Vinv[i]) for i in range(r)]


def _solve_coords(basis, vec):
    """Exact solution s of sum_i s_i basis_i = vec; None if inconsistent."""
    n = len(vec)
    d = len(basis)
    A = [[Fraction(basis[j][i]) for j in range(d)] + [Fraction(vec[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        A[r] = [x / A[r][c] for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, n):
        if A[i][d] != 0:
            return None
    s = [Fraction(0)] * d
    for i, c in enumerate(piv_cols):
        s[c] = A[i][d]
    return tuple(s)


class LatticePolytope:
    """Convex hull of finitely many integer points, ambient dim <= 3."""

    __slots__ = ("n", "dim", "vertices", "facets", "_origin", "_basis", "_flat")

    def __init__(self):
        raise TypeError("use LatticePolytope.hull(points)")

    @classmethod
    def hull(cls, points):
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            raise ValueError("empty point set")
        n = len(pts[0])
        if n > 3:
            raise ValueError("ambient dimension at most 3")
        if any(len(p) != n for p in pts):
            raise ValueError("mixed point lengths")
        self = cls.__new__(cls)
        self.n = n
        d = affine_dim(pts)
        self.dim = d
        self._origin = None
        self._basis = None
        self._flat = None
        if d == n:
            self.facets = _full_dim_facets(pts, n)
            self.vertices = _extract_vertices(pts, self.facets, n)
        elif d == 0:
            self.vertices = (pts[0],)
            self.facets = None
        else:
            origin = pts[0]
            basis = saturated_row_basis([_sub(p, origin) for p in pts])
            flat_pts = []
            for p in pts:
                s = _solve_coords(basis, _sub(p, origin))
                flat_pts.append(tuple(int(x) for x in s))
            flat = cls.hull(flat_pts)
            self._origin = origin
            self._basis = basis
            self._flat = flat
            lift = lambda q: _add(origin, tuple(_dot([b[i] for b in basis], q)
                                                for i in range(n)))
            self.vertices = tuple(sorted(lift(v) for v in flat.vertices))
            self.facets = None
        return self

    def contains(self, point):
        point = tuple(point)
        if len(point) != self.n:
            raise ValueError("dimension mismatch")
        if self.dim == self.n:
            return all(_dot(u, point) + c >= 0 for u, c in self.facets)
        if self.dim == 0:
            return all(Fraction(a) == b for a, b in zip(point, self.vertices[0]))
        s = _solve_coords(self._basis, _sub(point, self._origin))
        if s is None:
            return False
        return self._flat.contains(s)

    def lattice_points(self):
        if self.dim == 0:
            return [self.vertices[0]]
        if self.dim == self.n:
            lows = [min(v[i] for v in self.vertices) for i in range(self.n)]
            highs = [max(v[i] for v in self.vertices) for i in range(self.n)]
            out = []
            def scan(prefix):
                i = len(prefix)
                if i == self.n:
                    if all(_dot(u, prefix) + c >= 0 for u, c in self.facets):
                        out.append(tuple(prefix))
                    return
                for x in range(lows[i], highs[i] + 1):
                    scan(prefix + [x])
            scan([])
            return out
        basis = self._basis
        lift = lambda q: _add(self._origin, tuple(_dot([b[i] for b in basis], q)
                                                  for i in range(self.n)))
        return sorted(lift(q) for q in self._flat.lattice_points())

    def faces(self, k):
        """Proper k-faces (vertex-set deduped) of a full-dimensional polytope."""
        if self.dim != self.n:
            raise ValueError("faces() needs a full-dimensional polytope")
        if not 0 <= k < self.dim:
            raise ValueError(f"face dimension {k} out of range")
        found = {}
        m = len(self.facets)
        for size in range(1, m + 1):
            for subset in combinations(range(m), size):
                verts = [v for v in self.vertices
                         if all(_dot(self.facets[i][0], v) + self.facets[i][1] == 0
                                for i in subset)]
                if verts and affine_dim(verts) == k:
                    key = tuple(sorted(verts))
                    if key not in found:
                        found[key] = Face(self, frozenset(subset), key)
        return sorted(found.values(), key=lambda f: f.vertices)

    def vertex_min(self):
        return tuple(min(v[i] for v in self.vertices) for i in range(self.n))

    def translate(self, t):
        return LatticePolytope.hull([_add(v, t) for v in self.vertices])

    def dilate(self, k):
        if k < 0:
            raise ValueError("dilation factor must be nonnegative")
        return LatticePolytope.hull([tuple(k * x for x in v) for v in self.vertices])

    def normalized(self):
        """Translate so the coordinatewise vertex minimum sits at the origin."""
        m = self.vertex_min()
        return self.translate(tuple(-x for x in m))

    def key(self):
        return self.normalized().vertices

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.n == other.n and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"


class Face:
    """A proper face of a full-dimensional LatticePolytope."""

    __slots__ = ("parent", "active", "vertices")

    def __init__(self, parent, active, vertices):
        self.parent = parent
        self.active = active
        self.vertices = tuple(vertices)

    @property
    def dim(self):
        return affine_dim(self.vertices)

    def contains(self, point):
        point = tuple(point)
        if not self.parent.contains(point):
            return False
        return all(_dot(self.parent.facets[i][0], point) + self.parent.facets[i][1] == 0
                   for i in self.active)

    def lattice_points(self):
        return [p for p in self.parent.lattice_points() if self.contains(p)]

    def as_polytope(self):
        return LatticePolytope.hull(self.vertices)

    def __repr__(self):
        return f"Face(dim={self.dim}, vertices={list(self.vertices)})"


def _full_dim_facets(pts, n):
    cands = set()
    if n == 1:
        cands = {(1,), (-1,)}
    elif n == 2:
        for p, q in combinations(pts, 2):
            d = _sub(q, p)
            u = _primitive((-d[1], d[0]))
            if u:
                cands.add(u)
                cands.add(tuple(-x for x in u))
    else:
        for p, q, r in combinations(pts, 3):
            a, b = _sub(q, p), _sub(r, p)
            u = _primitive((a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]))
            if u:
                cands.add(u)
                cands.add(tuple(-x for x in u))
    facets = set()
    for u in cands:
        m = min(_dot(u, p) for p in pts)
        touching = [p for p in pts if _dot(u, p) == m]
        if affine_dim(touching) == n - 1:
            facets.add((u, -m))
    return tuple(sorted(facets))


def _extract_vertices(pts, facets, n):
    verts = []
    for p in pts:
        active = [list(u) for u, c in facets if _dot(u, p) + c == 0]
        if active and rank_int(active) == n:
            verts.append(p)
    return tuple(sorted(verts))


def face_chart(face):
    """(origin, basis) identifying the face's affine lattice with Z^dim.

    The basis is saturated, so lattice points of the face biject with
    lattice points of its 2-D (or 1-D) image.
    """
    verts = face.vertices if isinstance(face, Face) else face.vertices
    origin = verts[0]
    basis = saturated_row_basis([_sub(v, origin) for v in verts])
    return origin, basis


def chart_project(origin, basis, point):
    s = _solve_coords(basis, _sub(tuple(point), origin))
    if s is None or any(x.denominator != 1 for x in s):
        raise ValueError(f"{point} is not on the chart lattice")
    return tuple(int(x) for x in s)


def chart_lift(origin, basis, q):
    n = len(origin)
    return _add(origin, tuple(_dot([b[i] for b in basis], q) for i in range(n)))


def ccw_vertices(poly):
    """Vertices of a full-dimensional 2-D polytope in counterclockwise order."""
    if poly.n != 2 or poly.dim != 2:
        raise ValueError("need a full-dimensional polygon")
    verts = list(poly.vertices)
    k = len(verts)
    cx = Fraction(sum(v[0] for v in verts), k)
    cy = Fraction(sum(v[1] for v in verts), k)

    def quadrant(v):
        dx, dy = v[0] - cx, v[1] - cy
        if dx > 0 and dy >= 0:
            return 0
        if dx <= 0 and dy > 0:
            return 1
        if dx < 0 and dy <= 0:
            return 2
        return 3

    def cmp(a, b):
        qa, qb = quadrant(a), quadrant(b)
        if qa != qb:
            return qa - qb
        cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(verts, key=cmp_to_key(cmp))


def polygon_edges(poly):
    """Counterclockwise edge list [(start, primitive direction, length)]."""
    verts = ccw_vertices(poly)
    edges = []
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        d = _sub(w, v)
        g = gcd(abs(d[0]), abs(d[1]))
        edges.append((v, (d[0] // g, d[1] // g), g))
    return edges


def minkowski_sum_points(A, B):
    return {_add(a, b) for a in A for b in B}
