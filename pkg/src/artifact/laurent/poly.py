"""Laurent polynomials in up to three variables with ParamPoly coefficients.

Exponent vectors are integer tuples of fixed length n; coefficients live in
Q[a1, ..., ak]. All arithmetic is exact. Division is single-divisor exact
division (None when the divisor does not divide), which is what the parser
and the mutation machinery need.
"""

from __future__ import annotations

from fractions import Fraction

from .params import ParamPoly


def _zero_vec(n):
    return (0,) * n


class Laurent:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"exponent {exps} has length != {n}")
                c = ParamPoly.coerce(c)
                if not c:
                    continue
                acc = clean.get(exps)
                c = c if acc is None else acc + c
                if c:
                    clean[exps] = c
                elif exps in clean:
                    del clean[exps]
        self.n = n
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {_zero_vec(n): ParamPoly.coerce(c)})

    @classmethod
    def var(cls, n, i):
        """The i-th variable (0-based) as a Laurent polynomial."""
        if not 0 <= i < n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): ParamPoly.const(1)})

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        return cls(n, {tuple(exps): ParamPoly.coerce(coeff)})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ParamPoly)):
            other = Laurent.const(self.n, other)
        if isinstance(other, Laurent):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset((k, hash(v)) for k, v in self.terms.items())))

    def _coerce(self, x):
        if isinstance(x, Laurent):
            self._check(x)
            return x
        if isinstance(x, (int, Fraction, ParamPoly)):
            return Laurent.const(self.n, x)
        raise TypeError(f"cannot combine Laurent with {type(x).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            s = c if acc is None else acc + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        p = Laurent.__new__(Laurent)
        p.n, p.terms = self.n, out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Laurent.__new__(Laurent)
        p.n = self.n
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                prod = ca * cb
                acc = out.get(k)
                s = prod if acc is None else acc + prod
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        p = Laurent.__new__(Laurent)
        p.n, p.terms = self.n, out
        return p

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("Laurent powers must be integers")
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only defined for monomials")
            (k, c), = self.terms.items()
            cv = c.as_const()
            if cv is None:
                raise ValueError("monomial coefficient is not invertible")
            return Laurent.monomial(self.n, tuple(x * e for x in k), Fraction(1) / cv ** (-e))
        out = Laurent.const(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def is_monomial(self):
        return len(self.terms) == 1

    def support(self):
        return sorted(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ParamPoly.const(0))

    def constant_term(self):
        return self.terms.get(_zero_vec(self.n), ParamPoly.const(0))

    def num_terms(self):
        return len(self.terms)

    def specialize(self, values):
        """Substitute rational values for parameters; values: {index: q}."""
        out = {}
        for k, c in self.terms.items():
            s = c.subs(values)
            if s:
                out[k] = s
        p = Laurent.__new__(Laurent)
        p.n, p.terms = self.n, out
        return p

    def min_exponents(self):
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        return tuple(min(k[i] for k in self.terms) for i in range(self.n))

    def div_exact(self, other):
        """Exact quotient self/other in the Laurent ring, or None.

        Shifts both operands into the polynomial range and reduces by the
        divisor's lex-leading term; a failed coefficient division certifies
        that the divisor does not divide.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return Laurent.zero(self.n)
        mp, mq = self.min_exponents(), other.min_exponents()
        shift = tuple(a - b for a, b in zip(mp, mq))
        p = {tuple(x - y for x, y in zip(k, mp)): c for k, c in self.terms.items()}
        q = {tuple(x - y for x, y in zip(k, mq)): c for k, c in other.terms.items()}
        qlead = max(q)
        qcoef = q[qlead]
        quo = {}
        while p:
            plead = max(p)
            diff = tuple(x - y for x, y in zip(plead, qlead))
            if any(e < 0 for e in diff):
                return None
            t = p[plead].div_exact(qcoef)
            if t is None:
                return None
            quo[diff] = t
            for kq, cq in q.items():
                k = tuple(x + y for x, y in zip(diff, kq))
                acc = p.get(k)
                s = -(t * cq) if acc is None else acc - t * cq
                if s:
                    p[k] = s
                elif k in p:
                    del p[k]
        return Laurent(self.n, {tuple(x + y for x, y in zip(k, shift)): c
                                for k, c in quo.items()})

    def substitute_monomial(self, matrix, scalings=None):
        """Monomial substitution x_j -> scale_j * prod_i x_i^(A_ij).

        matrix is given by rows; the exponent vector maps as v -> A v. Each
        scaling is a ParamPoly monomial, a rational, or a (num, den) pair of
        such, so maps like x -> x/lam stay inside the ring. Raises when a
        resulting coefficient fails to clear its denominator.
        """
        n = self.n
        rows = [tuple(r) for r in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be {n}x{n}")
        pairs = None
        if scalings is not None:
            if len(scalings) != n:
                raise ValueError(f"need {n} scalings")
            pairs = [_scale_pair(s) for s in scalings]
        out = {}
        for v, c in self.terms.items():
            w = tuple(sum(rows[i][j] * v[j] for j in range(n)) for i in range(n))
            if pairs is not None:
                num = ParamPoly.const(1)
                den = ParamPoly.const(1)
                for j in range(n):
                    nj, dj = pairs[j]
                    if v[j] > 0:
                        num = num * nj ** v[j]
                        den = den * dj ** v[j]
                    elif v[j] < 0:
                        num = num * dj ** (-v[j])
                        den = den * nj ** (-v[j])
                c = (c * num).div_exact(den)
                if c is None:
                    raise ValueError(f"scaling does not clear the coefficient at {v}")
            acc = out.get(w)
            s = c if acc is None else acc + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return Laurent(n, out)

    def __str__(self):
        from .parser import format_laurent
        return format_laurent(self)

    def __repr__(self):
        return f"Laurent({self})"


def _scale_pair(s):
    if isinstance(s, tuple) and len(s) == 2:
        num, den = ParamPoly.coerce(s[0]), ParamPoly.coerce(s[1])
    else:
        num, den = ParamPoly.coerce(s), ParamPoly.const(1)
    if not num or not den:
        raise ValueError("scalings must be nonzero")
    if not (num.is_monomial() and den.is_monomial()):
        raise ValueError("scalings must be parameter monomials")
    return num, den


def specialize(p, values):
    return p.specialize(values)
