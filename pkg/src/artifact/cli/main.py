"""Command-line surface: lattice inspection, family verification, Fano
constructors, Laurent-polynomial operations, and batch fixture replay.

Exit status: 0 all checks pass, 1 a verification failed, 2 usage or I/O
error. All numbers print exactly (integers or p/q rationals).
"""

import json
import sys

import click

from ..fano import (
    CurveOnFano,
    TripleIntersectionData,
    anticanonical_gram,
    blowup_extend,
    double_cover_gram,
    product_dp_lattice,
    projective_bundle_gram,
)
from ..lattice import basic_invariants, discriminant_group, format_rational
from ..lattice.textio import load_lattice, parse_int_rows, parse_rational
from ..laurent import (
    LaurentSyntaxError,
    dual_and_reflexive,
    format_laurent,
    is_minkowski_polynomial,
    lg_constructor,
    main_period,
    minkowski_decompositions,
    monomial_transform,
    mutate,
    mutate_triple,
    newton_polytope,
    parse_laurent,
)
from .chains import load_chain, verify_chain
from .fixtures import (
    FixtureError,
    default_fixture_dir,
    load_fixture,
    verify_all,
)
from ..pencil import verify_family


def _fail_io(message):
    click.echo("error: %s" % message, err=True)
    sys.exit(2)


def _emit(ctx, payload, text_lines):
    if ctx.obj.get("json"):
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _gram_lines(L):
    rows = L.gram_rows()
    out = ["gram = ["]
    for i, row in enumerate(rows):
        tail = "," if i + 1 < len(rows) else ""
        out.append("  [%s]%s" % (", ".join(str(x) for x in row), tail))
    out.append("]")
    return out


def _read_poly(poly, file, n_vars=None):
    if (poly is None) == (file is None):
        raise click.UsageError("give exactly one of --poly or --file")
    if file is not None:
        try:
            with open(file) as fh:
                poly = fh.read()
        except OSError as exc:
            _fail_io(str(exc))
    try:
        return parse_laurent(poly, n_vars=n_vars)
    except LaurentSyntaxError as exc:
        raise click.UsageError("bad polynomial: %s" % exc)


def _parse_assign(text):
    """--assign a1=1,a2=2/3  ->  {1: Fraction(1), 2: Fraction(2,3)}"""
    values = {}
    if not text:
        return values
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, eq, val = piece.partition("=")
        name = name.strip()
        if not eq:
            raise click.UsageError("assignment %r needs name=value" % piece)
        if len(name) > 1 and name[0] == "a" and name[1:].isdigit():
            idx = int(name[1:])
        elif len(name) == 1 and name.isalpha() and name.islower():
            idx = ord(name) - ord("a") + 1
        else:
            raise click.UsageError("bad parameter name %r" % name)
        if idx < 1:
            raise click.UsageError("bad parameter name %r" % name)
        try:
            values[idx] = parse_rational(val.strip())
        except ValueError as exc:
            raise click.UsageError(str(exc))
    return values


def _parse_vector(text, name):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise click.UsageError("%s must be comma-separated integers" % name)


def _parse_matrix(text, name):
    try:
        return parse_int_rows(text)
    except ValueError as exc:
        raise click.UsageError("%s: %s" % (name, exc))


def _maybe_specialize(p, assign):
    values = _parse_assign(assign)
    if values:
        return p.specialize(values)
    return p


@click.group()
@click.option("--json", "json_mode", is_flag=True, help="machine-readable output")
@click.option("--strict", is_flag=True, help="reject unknown fixture keys")
@click.option("--parallel", type=int, default=1, show_default=True,
              help="worker threads for batch verification")
@click.pass_context
def cli(ctx, json_mode, strict, parallel):
    """Exact lattice and Laurent-polynomial verification toolkit."""
    if parallel < 1:
        raise click.UsageError("--parallel must be at least 1")
    ctx.obj = {"json": json_mode, "strict": strict, "parallel": parallel}


# ---------------------------------------------------------------- lattice

@cli.group()
def lattice():
    """Operations on lattice files (sectioned text with a gram matrix)."""


@lattice.command("invariants")
@click.argument("path", type=click.Path())
@click.pass_context
def lattice_invariants(ctx, path):
    """Rank, signature, determinant, and discriminant form of a lattice."""
    try:
        L = load_lattice(path)
    except (OSError, ValueError) as exc:
        _fail_io(str(exc))
    rank, det, (pos, neg), parity = basic_invariants(L)
    disc = discriminant_group(L)
    payload = {
        "rank": rank,
        "determinant": det,
        "signature": [pos, neg],
        "parity": parity,
        "disc_orders": list(disc.orders),
        "disc_q": [format_rational(disc.q_value(_unit(disc, i)))
                   for i in range(len(disc.orders))],
    }
    lines = [
        "rank        %d" % rank,
        "signature   (%d, %d)" % (pos, neg),
        "determinant %d" % det,
        "parity      %s" % parity,
        "disc group  %s" % _group_name(disc.orders),
        "disc q      %s" % ", ".join(payload["disc_q"]),
    ]
    _emit(ctx, payload, lines)


def _unit(disc, i):
    return tuple(1 if j == i else 0 for j in range(len(disc.orders)))


def _group_name(orders):
    if not orders:
        return "trivial"
    return " x ".join("Z/%d" % d for d in orders)


# ----------------------------------------------------------------- family

@cli.group()
def family():
    """Single-family fixture operations."""


@family.command("verify")
@click.argument("path", type=click.Path())
@click.pass_context
def family_verify(ctx, path):
    """Replay one .fam (pencil) or .lg (polynomial chain) fixture."""
    try:
        if path.endswith(".lg"):
            report = verify_chain(load_chain(path))
        else:
            report = verify_family(load_fixture(path, strict=ctx.obj["strict"]))
    except (FixtureError, OSError) as exc:
        _fail_io(str(exc))
    payload = {
        "id": report.family_id,
        "status": report.status(),
        "checks": {k: bool(v) for k, v in report.checks.items()},
    }
    _emit(ctx, payload, report.lines())
    sys.exit(0 if report.passed else 1)


# ------------------------------------------------------------------- fano

@cli.group()
def fano():
    """Picard-lattice constructors."""


@fano.command("bundle")
@click.option("--base", type=click.Choice(["P1", "P2"]), required=True)
@click.option("--degrees", required=True,
              help="comma-separated twist degrees (two for P2, three for P1)")
@click.pass_context
def fano_bundle(ctx, base, degrees):
    """Split projective bundle pairing in the basis (H, zeta)."""
    try:
        L = projective_bundle_gram(base, _parse_vector(degrees, "--degrees"))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(ctx, {"gram": L.gram_rows()}, _gram_lines(L))


@fano.command("product-dp")
@click.option("--points", "d", type=int, required=True,
              help="number of blown-up plane points")
@click.pass_context
def fano_product_dp(ctx, d):
    """Pairing for a surface in (line) x (blown-up plane), basis (R.., G, S)."""
    try:
        L = product_dp_lattice(d)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(ctx, {"gram": L.gram_rows()}, _gram_lines(L))


@fano.command("blowup")
@click.option("--file", "path", type=click.Path(), required=True,
              help="lattice file for the blown-up variety")
@click.option("--pairing", required=True,
              help="curve pairing against the basis, comma-separated")
@click.option("--genus", type=int, required=True)
@click.pass_context
def fano_blowup(ctx, path, pairing, genus):
    """Extend a pairing by the exceptional class of a curve blow-up."""
    try:
        base = load_lattice(path)
    except (OSError, ValueError) as exc:
        _fail_io(str(exc))
    try:
        curve = CurveOnFano(_parse_vector(pairing, "--pairing"), genus)
        L = blowup_extend(base, curve)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(ctx, {"gram": L.gram_rows()}, _gram_lines(L))


@fano.command("triple")
@click.option("--file", "path", type=click.Path(), required=True,
              help="sectioned file with labels, entries, minus_k")
@click.option("--double-cover", is_flag=True,
              help="pull the pairing back through a degree-2 cover")
@click.pass_context
def fano_triple(ctx, path, double_cover):
    """Contract a symmetric triple-intersection tensor to a pairing."""
    try:
        data = _load_triple(path)
    except (OSError, ValueError, FixtureError) as exc:
        _fail_io(str(exc))
    L = double_cover_gram(data) if double_cover else anticanonical_gram(data)
    _emit(ctx, {"labels": data.labels, "gram": L.gram_rows()}, _gram_lines(L))


def _load_triple(path):
    """[triple] labels = A, B / entries = [[i,j,k,v], ...] / minus_k = [..]"""
    from .fixtures import parse_sections
    with open(path) as fh:
        sections = parse_sections(fh.read(), path)
    got = {}
    for name, line, entries in sections:
        if name != "triple":
            raise FixtureError(path, line, "unknown section [%s]" % name)
        for key, val, at in entries:
            if key in got:
                raise FixtureError(path, at, "duplicate key %r" % key)
            got[key] = (val, at)
    for key in ("labels", "entries", "minus_k"):
        if key not in got:
            raise FixtureError(path, 1, "missing key %r" % key)
    labels = [tok.strip() for tok in got["labels"][0].split(",") if tok.strip()]
    rows = parse_int_rows(got["entries"][0])
    sparse = {}
    for row in rows:
        if len(row) != 4:
            raise FixtureError(path, got["entries"][1],
                               "entries rows are [i, j, k, value]")
        i, j, k, v = row
        if not all(0 <= t < len(labels) for t in (i, j, k)):
            raise FixtureError(path, got["entries"][1],
                               "index out of range in %r" % (row,))
        sparse[(i, j, k)] = v
    try:
        minus_k = [int(t) for t in got["minus_k"][0].strip("[] ").split(",")]
    except ValueError:
        raise FixtureError(path, got["minus_k"][1],
                           "minus_k must be comma-separated integers") from None
    return TripleIntersectionData.from_entries(labels, sparse, minus_k)


# ---------------------------------------------------------------- laurent

@cli.group()
def laurent():
    """Laurent-polynomial operations."""


_POLY_OPTS = [
    click.option("--poly", help="polynomial expression"),
    click.option("--file", "file_", type=click.Path(),
                 help="file holding the expression"),
]


def _with_poly(fn):
    for opt in reversed(_POLY_OPTS):
        fn = opt(fn)
    return fn


@laurent.command("newton")
@_with_poly
@click.pass_context
def laurent_newton(ctx, poly, file_):
    """Vertices and facets of the Newton polytope."""
    p = _read_poly(poly, file_)
    try:
        P = newton_polytope(p)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "dim": P.dim,
        "vertices": [list(v) for v in P.vertices],
        "facets": [{"normal": list(u), "offset": c} for u, c in P.facets],
        "lattice_points": len(P.lattice_points()),
    }
    lines = ["dim %d in Z^%d" % (P.dim, P.n),
             "vertices: " + "; ".join(str(tuple(v)) for v in P.vertices),
             "lattice points: %d" % payload["lattice_points"]]
    for u, c in P.facets:
        lines.append("facet  u=%s  c=%d" % (tuple(u), c))
    _emit(ctx, payload, lines)


@laurent.command("dual")
@_with_poly
@click.pass_context
def laurent_dual(ctx, poly, file_):
    """Reflexivity check and the dual polytope's vertices."""
    p = _read_poly(poly, file_)
    try:
        ok, data = dual_and_reflexive(newton_polytope(p))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if ok:
        payload = {"reflexive": True, "dual_vertices": [list(v) for v in data]}
        lines = ["reflexive: yes",
                 "dual vertices: " + "; ".join(str(tuple(v)) for v in data)]
    else:
        payload = {"reflexive": False, "reason": data}
        lines = ["reflexive: no", "reason: %s" % data]
    _emit(ctx, payload, lines)


@laurent.command("mutate")
@_with_poly
@click.option("--direction", required=True, help="primitive weight vector m")
@click.option("--factor", required=True, help="mutation factor g")
@click.option("--assign", default="", help="parameter values a1=1,a2=2/3")
@click.pass_context
def laurent_mutate(ctx, poly, file_, direction, factor, assign):
    """Mutate along (m, g)."""
    p = _read_poly(poly, file_)
    m = _parse_vector(direction, "--direction")
    try:
        g = parse_laurent(factor, n_vars=p.n)
    except LaurentSyntaxError as exc:
        raise click.UsageError("bad factor: %s" % exc)
    try:
        q = mutate(p, m, g)
    except ValueError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    q = _maybe_specialize(q, assign)
    _emit(ctx, {"result": format_laurent(q)}, [format_laurent(q)])


@laurent.command("mutate-triple")
@click.option("--file", "file_", type=click.Path(),
              help="chain fixture (.lg) to replay")
@click.option("--poly", help="single-step input polynomial")
@click.option("--m", "m_rows", help="pre-map matrix rows, e.g. [[0,1,0],...]")
@click.option("--f", "f_text", help="mutation factor")
@click.option("--n", "n_rows", help="post-map matrix rows")
@click.pass_context
def laurent_mutate_triple(ctx, file_, poly, m_rows, f_text, n_rows):
    """Replay a chain fixture, or apply one (M, f, N) step to --poly."""
    if file_ is not None and poly is None:
        try:
            report = verify_chain(load_chain(file_))
        except (FixtureError, OSError) as exc:
            _fail_io(str(exc))
        payload = {
            "id": report.family_id,
            "status": report.status(),
            "checks": {k: bool(v) for k, v in report.checks.items()},
        }
        _emit(ctx, payload, report.lines())
        sys.exit(0 if report.passed else 1)
    if poly is None or not (m_rows and f_text and n_rows):
        raise click.UsageError(
            "need --file, or --poly with --m, --f, and --n")
    p = _read_poly(poly, None, n_vars=3)
    M = _parse_matrix(m_rows, "--m")
    N = _parse_matrix(n_rows, "--n")
    try:
        f = parse_laurent(f_text, n_vars=3)
    except LaurentSyntaxError as exc:
        raise click.UsageError("bad factor: %s" % exc)
    try:
        q = mutate_triple(p, (M, f, N))
    except ValueError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    _emit(ctx, {"result": format_laurent(q)}, [format_laurent(q)])


@laurent.command("period")
@_with_poly
@click.option("--assign", default="", help="parameter values a1=1,a2=2/3")
@click.option("--terms", type=int, default=12, show_default=True,
              help="highest power recorded")
@click.pass_context
def laurent_period(ctx, poly, file_, assign, terms):
    """Constant-term sequence of p^0..p^terms."""
    p = _maybe_specialize(_read_poly(poly, file_), assign)
    try:
        coeffs = main_period(p, terms=terms)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    text = [format_rational(c) for c in coeffs]
    _emit(ctx, {"coefficients": text}, [", ".join(text)])


@laurent.command("minkowski")
@_with_poly
@click.pass_context
def laurent_minkowski(ctx, poly, file_):
    """Lattice Minkowski decompositions of the Newton polytope's facets."""
    p = _read_poly(poly, file_)
    try:
        P = newton_polytope(p)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = []
    lines = []
    if P.dim <= 2:
        faces = [P]
    else:
        faces = [f.as_polytope() for f in P.faces(P.dim - 1)]
    for i, F in enumerate(faces):
        try:
            decs = minkowski_decompositions(F)
        except ValueError as exc:
            payload.append({"face": i, "error": str(exc)})
            lines.append("face %d: %s" % (i, exc))
            continue
        payload.append({
            "face": i,
            "vertices": [list(v) for v in F.vertices],
            "decompositions": [
                [[ [list(v) for v in s.vertices], k] for s, k in pairs]
                for pairs in decs
            ],
        })
        lines.append("face %d  %s: %d decomposition(s)"
                     % (i, tuple(tuple(v) for v in F.vertices), len(decs)))
        for pairs in decs:
            desc = " + ".join("%d*%s" % (k, tuple(tuple(v) for v in s.vertices))
                              for s, k in pairs)
            lines.append("    " + desc)
    _emit(ctx, payload, lines)


@laurent.command("classify")
@_with_poly
@click.option("--assign", default="", help="parameter values a1=1,a2=2/3")
@click.pass_context
def laurent_classify(ctx, poly, file_, assign):
    """Decide whether every facet polynomial factors per its decomposition."""
    p = _maybe_specialize(_read_poly(poly, file_), assign)
    try:
        ok, data = is_minkowski_polynomial(p)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if ok:
        payload = {"minkowski": True,
                   "faces": {str(k): {"pairs": len(v["pairs"])}
                             for k, v in data.items()}}
        lines = ["minkowski polynomial: yes"]
        for normal, info in sorted(data.items()):
            lines.append("  facet u=%s: %d summand entr%s"
                         % (normal, len(info["pairs"]),
                            "y" if len(info["pairs"]) == 1 else "ies"))
    else:
        payload = {"minkowski": False, "reason": data}
        lines = ["minkowski polynomial: no", "reason: %s" % data]
    _emit(ctx, payload, lines)


@laurent.command("construct")
@click.option("--target", required=True,
              help="dp3..dp9, quadric-square, quadric-cone, or a family id")
@click.option("--assign", default="", help="parameter values a1=1,a2=2/3")
@click.pass_context
def laurent_construct(ctx, target, assign):
    """Build a parametrized model by name."""
    try:
        p = lg_constructor(target)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    p = _maybe_specialize(p, assign)
    _emit(ctx, {"target": target, "poly": format_laurent(p)},
          [format_laurent(p)])


# -------------------------------------------------------------- verify-all

@cli.command("verify-all")
@click.argument("directory", type=click.Path(), required=False)
@click.pass_context
def cli_verify_all(ctx, directory):
    """Replay every fixture in a directory (default: the shipped corpus)."""
    directory = directory or default_fixture_dir()
    try:
        report = verify_all(directory, parallelism=ctx.obj["parallel"],
                            strict=ctx.obj["strict"])
    except NotADirectoryError:
        _fail_io("not a directory: %s" % directory)
    if ctx.obj.get("json"):
        click.echo(report.to_json())
    else:
        click.echo(report.text())
    sys.exit(report.exit_code)


def main():
    cli(prog_name="artifact")


if __name__ == "__main__":
    main()
