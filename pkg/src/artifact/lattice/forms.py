"""Discriminant groups, finite quadratic/bilinear forms, and form equivalence.

The discriminant group of a nondegenerate integral lattice L is A = L*/L,
presented by invariant factors d1 | d2 | ... (1s dropped) with generator
lifts in L (x) Q. For even lattices the induced quadratic form takes values
in Q/2Z; the bilinear form always takes values in Q/Z. Values are reduced
into [0,1) and [0,2) to match the usual table conventions.
"""

import itertools
from fractions import Fraction
from math import gcd

from .matrices import smith_normal_form, snf_diagonal
from .lattices import IntegralLattice


class FiniteQuadraticForm:
    """Form on a finite abelian group presented as sum Z/d_i.

    The presentation orders d_i need not be a divisibility chain (printed
    tables often list generator orders like (2,2,3)); canonical invariant
    factors are derived on demand for comparisons.
    """

    def __init__(self, orders, bilinear, quadratic=None, generators=None):
        self.orders = tuple(int(d) for d in orders)
        if any(d <= 1 for d in self.orders):
            raise ValueError("generator orders must be > 1")
        k = len(self.orders)
        self.bilinear = tuple(
            tuple(Fraction(x) % 1 for x in row) for row in bilinear
        )
        if len(self.bilinear) != k or any(len(r) != k for r in self.bilinear):
            raise ValueError("bilinear matrix has wrong shape")
        for i in range(k):
            for j in range(k):
                if self.bilinear[i][j] != self.bilinear[j][i]:
                    raise ValueError("bilinear form must be symmetric")
        if quadratic is None:
            self.quadratic = None
        else:
            self.quadratic = tuple(Fraction(x) % 2 for x in quadratic)
            if len(self.quadratic) != k:
                raise ValueError("quadratic vector has wrong length")
        self.generators = None
        if generators is not None:
            self.generators = tuple(tuple(Fraction(x) for x in g) for g in generators)

    @property
    def invariant_factors(self):
        """Canonical divisibility chain for the underlying group."""
        k = len(self.orders)
        if k == 0:
            return ()
        diag = [[self.orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
        return tuple(d for d in snf_diagonal(diag) if d > 1)

    def order(self):
        n = 1
        for d in self.orders:
            n *= d
        return n

    def is_trivial(self):
        return not self.orders

    def elements(self):
        """All elements as coefficient tuples over the presentation orders."""
        return itertools.product(*(range(d) for d in self.orders))

    def element_order(self, coeffs):
        n = 1
        for c, d in zip(coeffs, self.orders):
            n = n * (d // gcd(c, d)) // gcd(n, d // gcd(c, d))
        return n

    def b_value(self, x, y):
        total = Fraction(0)
        for i, ci in enumerate(x):
            if ci == 0:
                continue
            row = self.bilinear[i]
            for j, cj in enumerate(y):
                if cj:
                    total += ci * cj * row[j]
        return total % 1

    def q_value(self, x):
        """q(sum c_i g_i) from the generator values, reduced mod 2Z."""
        if self.quadratic is None:
            raise ValueError("no quadratic refinement stored (odd lattice)")
        total = Fraction(0)
        for i, ci in enumerate(x):
            if ci == 0:
                continue
            total += ci * ci * self.quadratic[i]
            for j in range(i + 1, len(x)):
                if x[j]:
                    total += 2 * ci * x[j] * self.bilinear[i][j]
        return total % 2

    def value_multiset(self):
        if self.quadratic is not None:
            return sorted(self.q_value(x) for x in self.elements())
        return sorted(self.b_value(x, x) for x in self.elements())

    def __repr__(self):
        if self.is_trivial():
            return "FiniteQuadraticForm(trivial)"
        return "FiniteQuadraticForm(%s, q=%s)" % (
            "x".join("Z/%d" % d for d in self.orders),
            self.quadratic,
        )


def discriminant_group(L):
    """Discriminant form of a nondegenerate lattice.

    Generators are the Smith-basis columns divided by their invariant
    factors, i.e. honest elements of the dual lattice modulo L.
    """
    if isinstance(L, IntegralLattice):
        gram = L.gram_rows()
        even = L.is_even()
    else:
        gram = [list(r) for r in L]
        even = all(gram[i][i] % 2 == 0 for i in range(len(gram)))
    n = len(gram)
    _, D, V = smith_normal_form(gram)
    diag = [D[i][i] for i in range(n)]
    if any(d == 0 for d in diag):
        raise ValueError("radical nonzero")
    gens = []
    factors = []
    for i, d in enumerate(diag):
        if d > 1:
            factors.append(d)
            gens.append([Fraction(V[r][i], d) for r in range(n)])
    bil = []
    for gi in gens:
        row = []
        Ggi = [sum(Fraction(gram[r][c]) * gi[c] for c in range(n)) for r in range(n)]
        for gj in gens:
            row.append(sum(a * b for a, b in zip(Ggi, gj)) % 1)
        bil.append(row)
    quad = None
    if even:
        quad = []
        for gi in gens:
            v = sum(
                gi[r] * gram[r][c] * gi[c] for r in range(n) for c in range(n)
            )
            quad.append(v % 2)
    return FiniteQuadraticForm(factors, bil, quad, generators=gens)


def negate_form(q):
    bil = [[(-x) % 1 for x in row] for row in q.bilinear]
    quad = None if q.quadratic is None else [(-x) % 2 for x in q.quadratic]
    return FiniteQuadraticForm(q.orders, bil, quad, generators=q.generators)


def _is_generating(images, orders):
    """Do the image tuples generate the full group sum Z/d_i?

    The subgroup generated by the columns of C is everything iff [C | diag(d)]
    has all Smith invariant factors equal to 1.
    """
    k = len(orders)
    C = [[img[i] for img in images] for i in range(k)]
    for i in range(k):
        row = [0] * k
        row[i] = orders[i]
        C[i].extend(row)
    return all(d == 1 for d in snf_diagonal(C))


def forms_equivalent(q1, q2, bound=10**4):
    """Group isomorphism preserving the (quadratic, if present) form?

    Pre-screens by invariant factors and the multiset of form values over
    the whole group, then backtracks over generator images.
    """
    if q1.invariant_factors != q2.invariant_factors:
        return False
    if q1.is_trivial():
        return True
    if (q1.quadratic is None) != (q2.quadratic is None):
        raise ValueError("cannot compare forms with and without quadratic part")
    order = q1.order()
    if order > bound:
        raise ValueError("brute-force bound exceeded")
    if (
        q1.orders == q2.orders
        and q1.bilinear == q2.bilinear
        and q1.quadratic == q2.quadratic
    ):
        return True
    if q1.value_multiset() != q2.value_multiset():
        return False

    orders1 = q1.orders
    k = len(orders1)
    has_q = q1.quadratic is not None

    def gen_value(i):
        if has_q:
            return q1.quadratic[i]
        return q1.bilinear[i][i]

    elements = [x for x in q2.elements() if any(x)]
    by_order = {}
    for x in elements:
        by_order.setdefault(q2.element_order(x), []).append(x)
    candidates = []
    for i in range(k):
        pool = by_order.get(orders1[i], [])
        want = gen_value(i)
        if has_q:
            pool = [x for x in pool if q2.q_value(x) == want]
        else:
            pool = [x for x in pool if q2.b_value(x, x) == want]
        if not pool:
            return False
        candidates.append(pool)

    chosen = []

    def backtrack(i):
        if i == k:
            return _is_generating(chosen, q2.orders)
        for x in candidates[i]:
            ok = True
            for j in range(i):
                if q2.b_value(chosen[j], x) != q1.bilinear[j][i]:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(x)
            if backtrack(i + 1):
                return True
            chosen.pop()
        return False

    return backtrack(0)


class GenusSymbol:
    """Comparison key for genus-level lattice identification."""

    def __init__(self, rank, signature, parity, disc_form):
        self.rank = rank
        self.signature = tuple(signature)
        self.parity = parity
        self.disc_form = disc_form

    @classmethod
    def of(cls, L):
        pos, neg = L.signature()
        if pos + neg != L.rank:
            raise ValueError("degenerate lattice has no genus symbol")
        parity = "even" if L.is_even() else "odd"
        return cls(L.rank, (pos, neg), parity, discriminant_group(L))


def genus_equal(L1, L2):
    """Same rank, signature, parity and equivalent discriminant forms."""
    g1, g2 = GenusSymbol.of(L1), GenusSymbol.of(L2)
    if (g1.rank, g1.signature, g1.parity) != (g2.rank, g2.signature, g2.parity):
        return False
    return forms_equivalent(g1.disc_form, g2.disc_form)
