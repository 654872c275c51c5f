"""Primitive-embedding criteria for even lattices and the duality check.

The sufficient conditions implemented here are the standard ones for
primitive embeddings of an even nondegenerate lattice into the even
unimodular lattice of signature (p, n):

  exists_unique:  n+ < p, n- < n, and l(A) <= (p + n) - rank - 2
  exists:         n+ <= p, n- <= n, and rank <= (p + n) / 2
  inconclusive:   neither inequality set is satisfied

where l(A) is the minimal number of generators of the discriminant group.
These are sufficient conditions only; "inconclusive" never means
"impossible".
"""

from .forms import discriminant_group, forms_equivalent, negate_form
from .lattices import direct_sum, hyperbolic_plane

EXISTS_UNIQUE = "exists_unique"
EXISTS = "exists"
INCONCLUSIVE = "inconclusive"

# (strict signature dominance, slack) pairs tried in order; the first that
# fires decides the verdict. Kept as data so the inequality set is auditable.
CRITERIA = (
    (EXISTS_UNIQUE, "strict", 2),
    (EXISTS, "weak", None),
)


def min_generators(q):
    """l(A): length of the invariant factor chain."""
    return len(q.invariant_factors)


def embedding_criteria(L, target_signature):
    """Three-valued primitive-embedding verdict for an even lattice."""
    p, n = target_signature
    if not L.is_even():
        raise ValueError("embedding criteria require an even lattice")
    if not L.is_nondegenerate():
        raise ValueError("lattice is degenerate")
    pos, neg = L.signature()
    ell = min_generators(discriminant_group(L))
    rank = L.rank
    total = p + n
    if pos < p and neg < n and ell <= total - rank - 2:
        return EXISTS_UNIQUE
    if pos <= p and neg <= n and 2 * rank <= total:
        return EXISTS
    return INCONCLUSIVE


class DualityReport:
    """Outcome of the rank/signature/discriminant-form comparison."""

    CHECKS = (
        "rank_sum_20",
        "ls_signature_hyperbolic",
        "complement_signature",
        "forms_match",
        "embedding_verdict",
    )

    def __init__(self, checks, detail):
        self.checks = dict(checks)
        self.detail = dict(detail)

    @property
    def passed(self):
        return all(self.checks.values())

    def status(self):
        return "PASS" if self.passed else "FAIL"

    def failing(self):
        return [name for name in self.CHECKS if not self.checks[name]]

    def lines(self):
        out = []
        for name in self.CHECKS:
            out.append("  %-26s %s" % (name, "ok" if self.checks[name] else "FAIL"))
        return out


def dn_dual_verify(L_S, pic_X):
    """Check that L_S and H + Pic X are dual in the sense of the K3 lattice.

    PASS requires: rank L_S + rank Pic = 20; signature(L_S) = (1, rank-1);
    signature(H + Pic) = (2, rank Pic); disc(H + Pic) equivalent to
    -disc(L_S); and the embedding verdict for L_S into (3,19) is not
    inconclusive.
    """
    for name, L in (("L_S", L_S), ("pic", pic_X)):
        if not L.is_nondegenerate():
            raise ValueError("%s lattice is degenerate" % name)
        if not L.is_even():
            raise ValueError("%s lattice is odd" % name)
    checks = {}
    detail = {}

    rank_sum = L_S.rank + pic_X.rank
    checks["rank_sum_20"] = rank_sum == 20
    detail["rank_sum"] = rank_sum

    sig_ls = L_S.signature()
    checks["ls_signature_hyperbolic"] = sig_ls == (1, L_S.rank - 1)
    detail["ls_signature"] = sig_ls

    comp = direct_sum(hyperbolic_plane(), pic_X)
    sig_comp = comp.signature()
    checks["complement_signature"] = sig_comp == (2, pic_X.rank)
    detail["complement_signature"] = sig_comp

    q_ls = discriminant_group(L_S)
    q_comp = discriminant_group(comp)
    checks["forms_match"] = forms_equivalent(q_comp, negate_form(q_ls))
    detail["ls_factors"] = q_ls.invariant_factors
    detail["complement_factors"] = q_comp.invariant_factors

    verdict = embedding_criteria(L_S, (3, 19))
    checks["embedding_verdict"] = verdict != INCONCLUSIVE
    detail["embedding_verdict"] = verdict

    return DualityReport(checks, detail)
