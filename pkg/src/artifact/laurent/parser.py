"""Text form of parametrized Laurent polynomials.

Grammar (left associative, standard precedence):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' ['-'] integer)?
    base   := integer | name | '(' expr ')'

Names: variables are x, y, z (up to three) or x1..xn; parameters are a1..ak.
Single letters other than x, y, z are accepted as parameter aliases by
alphabet position (a -> a1, b -> a2, c -> a3, ...), so pencil coefficients
like c, d can be typed directly. Division must be exact in the Laurent ring;
"x/(x+y)" is rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .params import ParamPoly
from .poly import Laurent

_VARS3 = ("x", "y", "z")


class LaurentSyntaxError(ValueError):
    def __init__(self, pos, message):
        super().__init__(f"col {pos}: {message}")
        self.pos = pos


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j], pos))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("name", text[i:j], pos))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch, pos))
            i += 1
        else:
            raise LaurentSyntaxError(pos, f"unexpected character {ch!r}")
    toks.append(("end", "", n + 1))
    return toks


def _split_name(name, pos):
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    if len(head) != 1 or not head.isalpha() or not head.islower():
        raise LaurentSyntaxError(pos, f"unknown name {name!r}")
    if tail and tail[0] == "0":
        raise LaurentSyntaxError(pos, f"bad index in {name!r}")
    return head, int(tail) if tail else None


def _scan_variables(toks):
    plain = set()
    indexed = set()
    for kind, val, pos in toks:
        if kind != "name":
            continue
        head, idx = _split_name(val, pos)
        if head in _VARS3 and idx is None:
            plain.add(head)
        elif head == "x" and idx is not None:
            indexed.add(idx)
        elif head in ("y", "z") and idx is not None:
            raise LaurentSyntaxError(pos, f"unknown name {val!r}")
    if plain and indexed:
        raise LaurentSyntaxError(1, "cannot mix x,y,z with x1..xn variables")
    if indexed:
        return max(indexed), True
    if "z" in plain:
        return 3, False
    if "y" in plain:
        return 2, False
    return 1, False


class _Parser:
    def __init__(self, toks, n, indexed):
        self.toks = toks
        self.i = 0
        self.n = n
        self.indexed = indexed

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise LaurentSyntaxError(tok[2], f"expected {kind!r}, found {tok[1]!r}")
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise LaurentSyntaxError(tok[2], f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        if self.peek()[0] == "-":
            self.take()
            p = -self.term()
        else:
            p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op[0] == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            q = self.factor()
            if op[0] == "*":
                p = p * q
            else:
                if not q:
                    raise LaurentSyntaxError(op[2], "division by zero")
                r = p.div_exact(q)
                if r is None:
                    raise LaurentSyntaxError(op[2], "division is not exact")
                p = r
        return p

    def factor(self):
        p = self.base()
        if self.peek()[0] == "^":
            op = self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.expect("num")
            try:
                p = p ** (sign * int(tok[1]))
            except ValueError as exc:
                raise LaurentSyntaxError(op[2], str(exc)) from None
        return p

    def base(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Laurent.const(self.n, int(val))
        if kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "name":
            return self.name_poly(val, pos)
        raise LaurentSyntaxError(pos, f"unexpected {val!r}")

    def name_poly(self, val, pos):
        head, idx = _split_name(val, pos)
        if head == "a" and idx is not None:
            return Laurent.const(self.n, ParamPoly.param(idx))
        if self.indexed:
            if head == "x" and idx is not None:
                if not 1 <= idx <= self.n:
                    raise LaurentSyntaxError(pos, f"variable {val!r} out of range")
                return Laurent.var(self.n, idx - 1)
        elif head in _VARS3 and idx is None:
            i = _VARS3.index(head)
            if i >= self.n:
                raise LaurentSyntaxError(pos, f"variable {val!r} out of range")
            return Laurent.var(self.n, i)
        if idx is None and head.isalpha() and head not in _VARS3:
            return Laurent.const(self.n, ParamPoly.param(ord(head) - ord("a") + 1))
        raise LaurentSyntaxError(pos, f"unknown name {val!r}")


def parse_laurent(text, n_vars=None):
    """Parse an expression into a Laurent polynomial.

    The variable count is inferred from the names that occur (z means 3,
    y means 2, x1..xn means n) unless n_vars forces a larger ambient ring.
    """
    toks = _tokenize(text)
    n, indexed = _scan_variables(toks)
    if n_vars is not None:
        if n_vars < n:
            raise LaurentSyntaxError(1, f"expression needs {n} variables, n_vars={n_vars}")
        n = n_vars
    return _Parser(toks, n, indexed).parse()


def _var_names(n):
    return _VARS3[:n] if n <= 3 else tuple(f"x{i + 1}" for i in range(n))


def _coeff_parts(c):
    """Split a ParamPoly into (sign, body, needs_parens)."""
    const = c.as_const()
    if const is not None:
        sign = 1 if const > 0 else -1
        mag = abs(const)
        return sign, (None if mag == 1 else str(mag)), False
    if c.is_monomial():
        (k, q), = c.terms.items()
        sign = 1 if q > 0 else -1
        parts = []
        if abs(q) != 1:
            parts.append(str(abs(q)))
        for i, e in enumerate(k):
            if e == 1:
                parts.append(f"a{i + 1}")
            elif e:
                parts.append(f"a{i + 1}^{e}")
        return sign, "*".join(parts), False
    return 1, str(c), True


def format_laurent(p):
    """Canonical text form; parse_laurent(format_laurent(p), p.n) round-trips."""
    if not p.terms:
        return "0"
    names = _var_names(p.n)
    chunks = []
    for k in sorted(p.terms, reverse=True):
        sign, body, parens = _coeff_parts(p.terms[k])
        var_bits = []
        for name, e in zip(names, k):
            if e == 1:
                var_bits.append(name)
            elif e:
                var_bits.append(f"{name}^{e}")
        var_part = "*".join(var_bits)
        if parens:
            body = f"({body})"
        if body and var_part:
            text = f"{body}*{var_part}"
        elif var_part:
            text = var_part
        else:
            text = body if body else "1"
        chunks.append((sign, text))
    out = []
    for i, (sign, text) in enumerate(chunks):
        if i == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)
