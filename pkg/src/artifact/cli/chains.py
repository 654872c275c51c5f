"""Laurent-polynomial fixture files (`.lg`): a parametrized model, an
optional reorientation, and an optional mutation chain with printed
intermediate results. Verification replays every stage symbolically."""

from ..laurent import (
    LaurentSyntaxError,
    lg_constructor,
    monomial_transform,
    mutate_triple,
    parse_laurent,
)
from ..lattice.textio import parse_int_rows
from ..pencil import LatticeReport
from .fixtures import FixtureError, parse_sections


class LGChain:
    """Parsed contents of one `.lg` fixture."""

    def __init__(self, family_id, n_vars, target, model, orient, steps, finish):
        self.family_id = family_id
        self.n_vars = n_vars
        self.target = target
        self.model = model
        self.orient = orient      # (matrix, expected) or None
        self.steps = steps        # [(M, f, N, expected)]
        self.finish = finish      # (matrix, expected) or None

    def stage_count(self):
        return 1 + (self.orient is not None) + len(self.steps) \
                 + (self.finish is not None)


def _entries_map(name, entries, path, line, allowed):
    out = {}
    for key, val, at in entries:
        if key not in allowed:
            raise FixtureError(path, at, "unknown key %r in [%s]" % (key, name))
        if key in out:
            raise FixtureError(path, at, "duplicate key %r in [%s]" % (key, name))
        out[key] = (val, at)
    for key in allowed:
        if key not in out:
            raise FixtureError(path, line, "[%s] missing key %r" % (name, key))
    return out


def _poly(val, n, path, line):
    try:
        return parse_laurent(val, n_vars=n)
    except LaurentSyntaxError as exc:
        raise FixtureError(path, line, str(exc)) from None


def _matrix(val, n, path, line):
    try:
        rows = parse_int_rows(val)
    except ValueError as exc:
        raise FixtureError(path, line, str(exc)) from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise FixtureError(path, line, "matrix must be %dx%d" % (n, n))
    return rows


def parse_chain(text, path="<string>"):
    sections = parse_sections(text, path)
    if not sections or sections[0][0] != "family":
        raise FixtureError(path, 1, "first section must be [family]")
    fam = _entries_map("family", sections[0][2], path, sections[0][1],
                       ("id", "vars"))
    fid = fam["id"][0]
    try:
        n = int(fam["vars"][0])
    except ValueError:
        raise FixtureError(path, fam["vars"][1], "vars must be an integer") from None
    if n < 1:
        raise FixtureError(path, fam["vars"][1], "vars must be positive")

    target = model = None
    orient = finish = None
    steps = []
    for name, line, entries in sections[1:]:
        if name == "model":
            if model is not None:
                raise FixtureError(path, line, "duplicate section [model]")
            got = _entries_map(name, entries, path, line, ("target", "poly"))
            target = got["target"][0]
            model = _poly(got["poly"][0], n, path, got["poly"][1])
        elif name == "orient":
            if orient is not None:
                raise FixtureError(path, line, "duplicate section [orient]")
            if steps or finish is not None:
                raise FixtureError(path, line, "[orient] must precede the chain")
            got = _entries_map(name, entries, path, line, ("map", "result"))
            orient = (_matrix(got["map"][0], n, path, got["map"][1]),
                      _poly(got["result"][0], n, path, got["result"][1]))
        elif name == "step":
            if finish is not None:
                raise FixtureError(path, line, "[step] after [finish]")
            got = _entries_map(name, entries, path, line,
                               ("M", "f", "N", "result"))
            steps.append((_matrix(got["M"][0], n, path, got["M"][1]),
                          _poly(got["f"][0], n, path, got["f"][1]),
                          _matrix(got["N"][0], n, path, got["N"][1]),
                          _poly(got["result"][0], n, path, got["result"][1])))
        elif name == "finish":
            if finish is not None:
                raise FixtureError(path, line, "duplicate section [finish]")
            got = _entries_map(name, entries, path, line, ("map", "result"))
            finish = (_matrix(got["map"][0], n, path, got["map"][1]),
                      _poly(got["result"][0], n, path, got["result"][1]))
        else:
            raise FixtureError(path, line, "unknown section [%s]" % name)
    if model is None:
        raise FixtureError(path, 1, "missing required section [model]")
    return LGChain(fid, n, target, model, orient, steps, finish)


def load_chain(path):
    with open(path) as fh:
        return parse_chain(fh.read(), path)


class ChainReport(LatticeReport):
    def summary_line(self):
        if self.passed:
            return "%-8s PASS  chain stages=%s terms=%s" % (
                self.family_id, self.detail.get("stages"),
                self.detail.get("terms"))
        return "%-8s FAIL  (%s)" % (self.family_id, ", ".join(self.failing()))


def verify_chain(chain):
    """Replay construction, reorientation, and every mutation step.

    A failed stage does not poison the rest: each later stage starts from
    the printed expected value, so failures localize.
    """
    checks = {}
    detail = {"target": chain.target, "stages": chain.stage_count()}
    try:
        built = lg_constructor(chain.target)
    except ValueError as exc:
        checks["construct"] = False
        detail["construct_error"] = str(exc)
        built = None
    else:
        checks["construct"] = built == chain.model
    current = chain.model
    if chain.orient is not None:
        mat, expected = chain.orient
        current = monomial_transform(current, mat)
        checks["orient"] = current == expected
        current = expected
    for k, (M, f, N, expected) in enumerate(chain.steps, start=1):
        name = "step%d" % k
        try:
            got = mutate_triple(current, (M, f, N))
        except ValueError as exc:
            checks[name] = False
            detail["%s_error" % name] = str(exc)
            got = None
        if got is not None:
            checks[name] = got == expected
        current = expected
    if chain.finish is not None:
        mat, expected = chain.finish
        checks["finish"] = monomial_transform(current, mat) == expected
        current = expected
    detail["terms"] = current.num_terms()
    return ChainReport(chain.family_id, checks, detail)
