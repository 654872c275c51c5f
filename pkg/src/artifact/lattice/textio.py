"""Plain-text lattice format: `gram = [[..],[..]]` rows plus optional labels.

The same literal syntax (nested integer lists, rationals as "p/q") is shared
by the family fixture files; the low-level readers live here.
"""

import ast
import re
from fractions import Fraction

from .lattices import IntegralLattice

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text):
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError("not a rational literal: %r" % text)
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_int_rows(text):
    """Parse a nested list literal of integers, e.g. [[0,1],[1,0]]."""
    try:
        value = ast.literal_eval(text.strip())
    except (SyntaxError, ValueError) as exc:
        raise ValueError("bad matrix literal: %s" % exc) from None
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ValueError("matrix literal must be a list of rows")
    rows = []
    for r in value:
        row = []
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError("matrix entries must be integers, got %r" % (x,))
            row.append(x)
        rows.append(row)
    return rows


def parse_rational_rows(text):
    """Nested list literal allowing "p/q" strings and integers."""
    cleaned = re.sub(r"(-?\d+\s*/\s*\d+)", r"'\1'", text.strip())
    try:
        value = ast.literal_eval(cleaned)
    except (SyntaxError, ValueError) as exc:
        raise ValueError("bad rational literal: %s" % exc) from None

    def conv(x):
        if isinstance(x, list):
            return [conv(y) for y in x]
        if isinstance(x, str):
            return parse_rational(x.replace(" ", ""))
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        raise ValueError("bad rational entry %r" % (x,))

    return conv(value)


def loads_lattice(text):
    """Read a lattice from the `key = value` sectioned text format."""
    gram = None
    labels = None
    buf = []
    key = None

    def flush():
        nonlocal gram, labels
        if key is None:
            return
        joined = "".join(buf)
        if key == "gram":
            gram = parse_int_rows(joined)
        elif key == "labels":
            labels = ast.literal_eval(joined)
        else:
            raise ValueError("unknown key %r in lattice text" % key)

    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = re.match(r"^(\w+)\s*=\s*(.*)$", stripped)
        if m:
            flush()
            key = m.group(1)
            buf = [m.group(2)]
        else:
            buf.append(stripped)
    flush()
    if gram is None:
        raise ValueError("lattice text is missing a gram matrix")
    return IntegralLattice(gram, labels)


def load_lattice(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_lattice(fh.read())


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
