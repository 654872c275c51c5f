"""Sectioned-text fixture files: parsing, schema checks, batch verification.

A `.fam` file carries one family: Picard gram, singular fibre data, the mixed
intersection block, Galois orbits, and the expected discriminant data. The
same directory may hold `.lg` files with Laurent-polynomial data; those are
stored as raw text here and interpreted by the polynomial layer.
"""

import json
import os
import re
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ..lattice import format_rational
from ..lattice.textio import parse_int_rows, parse_rational, parse_rational_rows
from ..pencil import ExpectedData, PencilConfig, SingularPoint, verify_family


class FixtureError(ValueError):
    """Parse or schema failure, annotated with file position."""

    def __init__(self, path, line, message, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = "%s:%d" % (path, line)
        if column is not None:
            where += ":%d" % column
        super().__init__("%s: %s" % (where, message))


class FixtureWarning(UserWarning):
    pass


_KNOWN_KEYS = {
    "family": {"id", "rank_pic"},
    "pic": {"gram"},
    "singularities": None,  # ordered P-labels, validated separately
    "curves": {"order"},
    "mixed": {"B", "C"},
    "galois": {"orbit"},
    "expected": {"factors", "Q", "B", "Q_dual", "B_dual"},
}

_REQUIRED_SECTIONS = ("family", "pic", "singularities", "curves", "mixed", "expected")

_SING_TYPE = re.compile(r"^([ADE])(\d+)$")
_FAMILY_ID = re.compile(r"^(\d+)\.(\d+)(p?)$")


def family_sort_key(fid):
    m = _FAMILY_ID.match(fid)
    if not m:
        return (10**6, 0, 0, fid)
    return (int(m.group(1)), int(m.group(2)), 1 if m.group(3) else 0, fid)


def parse_sections(text, path="<string>"):
    """[(section, line, [(key, value, line), ...])] with bracket continuation."""
    sections = []
    current = None
    pending = None  # (key, [chunks], depth, line)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if pending is not None:
            key, chunks, depth, at = pending
            chunks.append(line)
            depth += line.count("[") - line.count("]")
            if depth > 0:
                pending = (key, chunks, depth, at)
                continue
            if depth < 0:
                raise FixtureError(path, lineno, "unbalanced ']' in value for %r" % key)
            current[2].append((key, " ".join(chunks), at))
            pending = None
            continue
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if not name:
                raise FixtureError(path, lineno, "empty section header")
            current = (name, lineno, [])
            sections.append(current)
            continue
        if current is None:
            raise FixtureError(path, lineno, "data before first section header")
        if "=" not in line:
            raise FixtureError(path, lineno, "expected 'key = value'", column=len(raw) - len(raw.lstrip()) + 1)
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if not key:
            raise FixtureError(path, lineno, "missing key before '='")
        depth = val.count("[") - val.count("]")
        if depth > 0:
            pending = (key, [val], depth, lineno)
        elif depth < 0:
            raise FixtureError(path, lineno, "unbalanced ']' in value for %r" % key)
        else:
            current[2].append((key, val, lineno))
    if pending is not None:
        raise FixtureError(path, pending[3], "unterminated bracketed value for %r" % pending[0])
    return sections


def _check_known(section, entries, path, strict):
    allowed = _KNOWN_KEYS[section]
    if allowed is None:
        return
    for key, _, line in entries:
        if key not in allowed:
            msg = "unknown key %r in [%s]" % (key, section)
            if strict:
                raise FixtureError(path, line, msg)
            warnings.warn("%s:%d: %s" % (path, line, msg), FixtureWarning, stacklevel=3)


def _single(entries, key, path, section, required=True):
    hits = [(v, line) for k, v, line in entries if k == key]
    if not hits:
        if required:
            line = entries[0][2] if entries else 1
            raise FixtureError(path, line, "[%s] missing key %r" % (section, key))
        return None, None
    if len(hits) > 1:
        raise FixtureError(path, hits[1][1], "duplicate key %r in [%s]" % (key, section))
    return hits[0]


def load_fixture(path, strict=False):
    """Parse one `.fam` file into a PencilConfig (expected data attached)."""
    with open(path) as fh:
        text = fh.read()
    sections = parse_sections(text, path)
    by_name = {}
    for name, line, entries in sections:
        if name not in _KNOWN_KEYS:
            msg = "unknown section [%s]" % name
            if strict:
                raise FixtureError(path, line, msg)
            warnings.warn("%s:%d: %s" % (path, line, msg), FixtureWarning, stacklevel=2)
            continue
        if name in by_name:
            raise FixtureError(path, line, "duplicate section [%s]" % name)
        by_name[name] = (line, entries)
    for name in _REQUIRED_SECTIONS:
        if name not in by_name:
            raise FixtureError(path, 1, "missing required section [%s]" % name)

    def section(name):
        return by_name[name][1]

    for name in by_name:
        _check_known(name, by_name[name][1], path, strict)

    # [family]
    fam_entries = section("family")
    fid, fid_line = _single(fam_entries, "id", path, "family")
    stem = os.path.splitext(os.path.basename(path))[0]
    if fid != stem:
        raise FixtureError(path, fid_line, "id %r does not match filename %r" % (fid, stem))
    if not _FAMILY_ID.match(fid):
        raise FixtureError(path, fid_line, "malformed family id %r" % fid)
    rank_txt, rank_line = _single(fam_entries, "rank_pic", path, "family")
    try:
        rank_pic = int(rank_txt)
    except ValueError:
        raise FixtureError(path, rank_line, "rank_pic must be an integer") from None

    def int_rows(sec, key):
        val, line = _single(section(sec), key, path, sec)
        try:
            return parse_int_rows(val)
        except ValueError as exc:
            raise FixtureError(path, line, str(exc)) from None

    gram = int_rows("pic", "gram")
    if len(gram) != rank_pic:
        raise FixtureError(path, by_name["pic"][0], "gram is %dx%d but rank_pic = %d"
                           % (len(gram), len(gram[0]) if gram else 0, rank_pic))

    # [singularities] : ordered P-labels
    sings = []
    for key, val, line in section("singularities"):
        if key != "P%d" % (len(sings) + 1):
            raise FixtureError(path, line, "singular points must be P1, P2, ... in order; got %r" % key)
        m = _SING_TYPE.match(val)
        if not m:
            raise FixtureError(path, line, "bad singularity type %r" % val)
        sings.append(SingularPoint(key, m.group(1), int(m.group(2))))
    if not sings:
        raise FixtureError(path, by_name["singularities"][0], "no singular points listed")

    order_txt, order_line = _single(section("curves"), "order", path, "curves")
    curves = [c.strip() for c in order_txt.split(",") if c.strip()]
    if not curves:
        raise FixtureError(path, order_line, "empty curve list")

    B = int_rows("mixed", "B")
    C = int_rows("mixed", "C")

    orbits = []
    if "galois" in by_name:
        for key, val, line in section("galois"):
            if key != "orbit":
                raise FixtureError(path, line, "only 'orbit' entries allowed in [galois]")
            members = [x.strip() for x in val.split(",") if x.strip()]
            if len(members) < 2:
                raise FixtureError(path, line, "orbit needs at least two members")
            orbits.append(members)

    expected = _parse_expected(section("expected"), path)

    try:
        return PencilConfig(fid, sings, curves, B, C, orbits, gram, expected)
    except ValueError as exc:
        raise FixtureError(path, by_name["mixed"][0], str(exc)) from None


def _parse_expected(entries, path):
    factors_txt, f_line = _single(entries, "factors", path, "expected")
    factors = []
    if factors_txt:
        for tok in factors_txt.split(","):
            tok = tok.strip()
            try:
                d = int(tok)
            except ValueError:
                raise FixtureError(path, f_line, "bad group order %r" % tok) from None
            if d <= 1:
                raise FixtureError(path, f_line, "group orders must exceed 1, got %d" % d)
            factors.append(d)
    k = len(factors)

    def rational_list(key, required):
        val, line = _single(entries, key, path, "expected", required=required)
        if val is None:
            return None
        try:
            vals = [parse_rational(tok) for tok in val.split(",") if tok.strip()]
        except ValueError as exc:
            raise FixtureError(path, line, str(exc)) from None
        if len(vals) != k:
            raise FixtureError(path, line, "%s has %d entries, expected %d" % (key, len(vals), k))
        return vals

    def rational_matrix(key, required):
        val, line = _single(entries, key, path, "expected", required=required)
        if val is None:
            return None
        try:
            rows = parse_rational_rows(val)
        except ValueError as exc:
            raise FixtureError(path, line, str(exc)) from None
        if len(rows) != k or any(len(r) != k for r in rows):
            raise FixtureError(path, line, "%s must be %dx%d" % (key, k, k))
        return rows

    if k == 0:
        return ExpectedData(factors=())
    Q = rational_list("Q", required=True)
    Bm = rational_matrix("B", required=True)
    Qd = rational_list("Q_dual", required=False)
    Bd = rational_matrix("B_dual", required=False)
    return ExpectedData(factors=tuple(factors), B=Bm, Q=Q, B_dual=Bd, Q_dual=Qd)


class LoadFailure:
    """Stand-in report for a fixture that could not be loaded or verified."""

    def __init__(self, family_id, error, stage="load"):
        self.family_id = family_id
        self.error = str(error)
        self.stage = stage
        self.checks = {stage: False}

    @property
    def passed(self):
        return False

    def status(self):
        return "FAIL(%s)" % self.stage

    def summary_line(self):
        return "%-8s %s  %s" % (self.family_id, self.status(), self.error)

    def as_dict(self):
        return {
            "id": self.family_id,
            "status": self.status(),
            "checks": dict(self.checks),
            "error": self.error,
        }


class RunReport:
    """Aggregated verification results, deterministically ordered."""

    def __init__(self, entries):
        self.entries = sorted(entries, key=lambda e: family_sort_key(e.family_id))

    @property
    def passed_count(self):
        return sum(1 for e in self.entries if e.passed)

    @property
    def failed_count(self):
        return len(self.entries) - self.passed_count

    @property
    def exit_code(self):
        return 0 if self.failed_count == 0 else 1

    def lines(self):
        out = [e.summary_line() for e in self.entries]
        out.append("== %d/%d PASS ==" % (self.passed_count, len(self.entries)))
        return out

    def text(self):
        return "\n".join(self.lines())

    def as_dict(self):
        return {
            "families": [_entry_dict(e) for e in self.entries],
            "pass": self.passed_count,
            "fail": self.failed_count,
            "exit": self.exit_code,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _entry_dict(entry):
    if isinstance(entry, LoadFailure):
        return entry.as_dict()
    return {
        "id": entry.family_id,
        "status": entry.status(),
        "checks": {k: bool(v) for k, v in entry.checks.items()},
        "detail": _jsonable(entry.detail),
    }


class FixtureSet:
    """Everything a fixture directory holds, keyed by family id."""

    def __init__(self, families, polynomials=None):
        self.families = families
        self.polynomials = polynomials or {}
        self.picard_table = {fid: cfg.pic for fid, cfg in families.items()}

    @classmethod
    def load_dir(cls, dirpath, strict=False):
        families = {}
        polynomials = {}
        for name in sorted(os.listdir(dirpath)):
            full = os.path.join(dirpath, name)
            if name.endswith(".fam"):
                cfg = load_fixture(full, strict=strict)
                families[cfg.family_id] = cfg
            elif name.endswith(".lg"):
                with open(full) as fh:
                    polynomials[os.path.splitext(name)[0]] = fh.read()
        return cls(families, polynomials)


def _verify_one(item):
    fid, path, strict = item
    if path.endswith(".lg"):
        # polynomial chain fixture; import here to avoid a cycle at load time
        from .chains import load_chain, verify_chain
        try:
            chain = load_chain(path)
        except (FixtureError, ValueError, OSError) as exc:
            return LoadFailure(fid, exc, stage="load")
        try:
            return verify_chain(chain)
        except Exception as exc:
            return LoadFailure(fid, exc, stage="error")
    try:
        cfg = load_fixture(path, strict=strict)
    except (FixtureError, ValueError, OSError) as exc:
        return LoadFailure(fid, exc, stage="load")
    try:
        return verify_family(cfg)
    except Exception as exc:  # surface, never abort the batch
        return LoadFailure(fid, exc, stage="error")


def verify_all(dirpath, parallelism=1, strict=False):
    """Replay every .fam and .lg fixture in a directory; never aborts early."""
    if not os.path.isdir(dirpath):
        raise NotADirectoryError(dirpath)
    jobs = []
    for name in sorted(os.listdir(dirpath)):
        if not (name.endswith(".fam") or name.endswith(".lg")):
            continue
        fid = os.path.splitext(name)[0]
        jobs.append((fid, os.path.join(dirpath, name), strict))
    if parallelism > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            entries = list(pool.map(_verify_one, jobs))
    else:
        entries = [_verify_one(j) for j in jobs]
    return RunReport(entries)


def default_fixture_dir():
    """The corpus shipped inside the package."""
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.join(os.path.dirname(here), "fixtures")
