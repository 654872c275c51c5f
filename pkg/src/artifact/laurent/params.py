"""Exact polynomial coefficients in named parameters a1, a2, ...

The parametrized Laurent polynomials carry coefficients from Q[a1, ..., ak].
Exponent keys are tuples with trailing zeros stripped, so polynomials agree
no matter how many parameters the ambient family happens to declare.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest


def _trim(exps):
    i = len(exps)
    while i > 0 and exps[i - 1] == 0:
        i -= 1
    return tuple(exps[:i])


def _lex_key(exps):
    # padded lexicographic order; total and multiplicative, so leading
    # terms of products multiply and exact division is detectable
    return exps


def _lex_gt(a, b):
    for x, y in zip_longest(a, b, fillvalue=0):
        if x != y:
            return x > y
    return False


class ParamPoly:
    """Polynomial over Q in the parameters, all exponents nonnegative."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                key = _trim(tuple(exps))
                if any(e < 0 for e in key):
                    raise ValueError("parameter exponents must be nonnegative")
                acc = clean.get(key)
                c = c if acc is None else acc + c
                if c:
                    clean[key] = c
                elif key in clean:
                    del clean[key]
        self.terms = clean

    @classmethod
    def const(cls, c):
        p = cls.__new__(cls)
        c = Fraction(c)
        p.terms = {(): c} if c else {}
        return p

    @classmethod
    def param(cls, i):
        """The parameter a_i, 1-based."""
        if i < 1:
            raise ValueError("parameter index is 1-based")
        p = cls.__new__(cls)
        p.terms = {tuple([0] * (i - 1) + [1]): Fraction(1)}
        return p

    @classmethod
    def monomial(cls, c, exps):
        return cls({tuple(exps): Fraction(c)})

    @staticmethod
    def coerce(x):
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ParamPoly")

    def __bool__(self):
        return bool(self.terms)

    @property
    def arity(self):
        return max((len(k) for k in self.terms), default=0)

    def is_const(self):
        return not self.terms or set(self.terms) == {()}

    def as_const(self):
        """The rational value if constant, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.as_const() == Fraction(other)
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        p = ParamPoly.__new__(ParamPoly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = ParamPoly.__new__(ParamPoly)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = ParamPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = _trim(tuple(x + y for x, y in zip_longest(ka, kb, fillvalue=0)))
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        p = ParamPoly.__new__(ParamPoly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("ParamPoly powers must be nonnegative integers")
        out = ParamPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def _lead(self):
        key = None
        for k in self.terms:
            if key is None or _lex_gt(k, key):
                key = k
        return key

    def div_exact(self, other):
        """Exact quotient self/other, or None when it does not divide.

        Single-divisor reduction in padded-lex order. Over an integral
        domain the leading term of a product is the product of leading
        terms, so a failing leading-term step certifies non-divisibility.
        """
        other = ParamPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero ParamPoly")
        dc = other.as_const()
        if dc is not None:
            p = ParamPoly.__new__(ParamPoly)
            p.terms = {k: c / dc for k, c in self.terms.items()}
            return p
        rem = self
        quo = ParamPoly.const(0)
        dlead = other._lead()
        dcoef = other.terms[dlead]
        while rem:
            rlead = rem._lead()
            diff = tuple(x - y for x, y in zip_longest(rlead, dlead, fillvalue=0))
            if any(e < 0 for e in diff):
                return None
            t = ParamPoly.monomial(rem.terms[rlead] / dcoef, diff)
            quo = quo + t
            rem = rem - t * other
        return quo

    def subs(self, values):
        """Substitute parameters; values maps 1-based index -> rational.

        Unmentioned parameters stay symbolic.
        """
        out = ParamPoly.const(0)
        for k, c in self.terms.items():
            factor = ParamPoly.const(c)
            rest = []
            for i, e in enumerate(k):
                if not e:
                    rest.append(0)
                elif (i + 1) in values:
                    factor = factor * (Fraction(values[i + 1]) ** e)
                    rest.append(0)
                else:
                    rest.append(e)
            out = out + factor * ParamPoly.monomial(1, rest)
        return out

    def _term_str(self, k, c, lead):
        parts = []
        for i, e in enumerate(k):
            if e == 1:
                parts.append(f"a{i + 1}")
            elif e:
                parts.append(f"a{i + 1}^{e}")
        mag = abs(c)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        body = "*".join(parts)
        if lead:
            return body if c > 0 else "-" + body
        return (" + " if c > 0 else " - ") + body

    def __str__(self):
        if not self.terms:
            return "0"
        arity = self.arity
        keys = sorted(self.terms,
                      key=lambda k: tuple(-e for e in k) + (0,) * (arity - len(k)))
        return "".join(self._term_str(k, self.terms[k], i == 0) for i, k in enumerate(keys))

    def __repr__(self):
        return f"ParamPoly({self})"


ZERO = ParamPoly.const(0)
ONE = ParamPoly.const(1)
