"""Classical period sequence of a Laurent polynomial.

phi_j is the constant-term coefficient of p^j. Powers are accumulated with a
reachability cut: an exponent vector v can still contribute to the constant
term after the remaining j multiplications only if -v lies in j times the
Newton box of p, so everything outside that box is dropped as we go. Exact
rational arithmetic throughout (integer fast path when p has integer
coefficients).
"""

from __future__ import annotations

from fractions import Fraction


def main_period(p, terms=12):
    """[phi_0, ..., phi_terms] for a Laurent polynomial with rational
    coefficients; raises on symbolic coefficients."""
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    if not p.terms:
        return [Fraction(1)] + [Fraction(0)] * terms
    items = []
    for k, c in p.terms.items():
        cv = c.as_const()
        if cv is None:
            raise ValueError("main_period needs rational coefficients; "
                             "specialize the parameters first")
        items.append((k, cv))
    n = p.n
    if all(c.denominator == 1 for _, c in items):
        items = [(k, int(c)) for k, c in items]
        one = 1
    else:
        one = Fraction(1)
    lows = [min(k[i] for k, _ in items) for i in range(n)]
    highs = [max(k[i] for k, _ in items) for i in range(n)]
    zero = (0,) * n
    out = [Fraction(1)]
    cur = {zero: one}
    for j in range(1, terms + 1):
        rem = terms - j
        nxt = {}
        for kv, cv in cur.items():
            for kp, cp in items:
                key = tuple(a + b for a, b in zip(kv, kp))
                # -key must stay reachable: -key in rem * box
                ok = True
                for i in range(n):
                    if not (lows[i] * rem <= -key[i] <= highs[i] * rem):
                        ok = False
                        break
                if ok:
                    nxt[key] = nxt.get(key, 0) + cv * cp
        cur = {k: v for k, v in nxt.items() if v}
        out.append(Fraction(cur.get(zero, 0)))
    return out
