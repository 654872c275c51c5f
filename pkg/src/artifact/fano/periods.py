"""Closed-form period evaluators for the three pencil families.

Everything here is plain polynomial arithmetic in whatever coefficient
objects the caller passes (integers, Fractions, parameter polynomials);
the only scalars introduced are exact rationals. Outputs are points in
weighted projective space, compared with wp_equal.
"""

from fractions import Fraction
from itertools import combinations

# coordinate weights: (alpha, beta, gamma, delta) and the rank-18 triple
WEIGHTS_2356 = (2, 3, 5, 6)
WEIGHTS_236 = (2, 3, 6)

_NINTH = Fraction(1, 9)
_27TH = Fraction(1, 27)
_1024_3 = Fraction(1024, 3)


def modular_invariants_233(a0, a1, a2, a3, a4, a5):
    """(alpha, beta, gamma, delta) of the six-coefficient family."""
    alpha = _NINTH * (144 * a1 * a2 * a3 * a4 + 24 * a0 * a1 * a4 * a5 + a5 ** 4)
    beta = -_27TH * (
        216 * a0 ** 2 * a1 ** 2 * a4 ** 2
        - 648 * a1 * a2 * a3 * a4 * a5 ** 2
        + 36 * a0 * a1 * a4 * a5 ** 3
        + a5 ** 6
    )
    gamma = 1024 * a3 * a2 * a0 ** 2 * a4 ** 3 * a1 ** 3
    delta = _1024_3 * a3 * a2 * a4 ** 3 * a1 ** 3 * (
        12 * a2 ** 2 * a3 ** 2 - 12 * a0 * a2 * a3 * a5 + a0 ** 2 * a5 ** 2
    )
    return (alpha, beta, gamma, delta)


def _pencil_233(a, b, lam, mu):
    alpha = _NINTH * (144 * a * lam ** 4 + 24 * a * b * lam ** 3 * mu + b ** 4 * mu ** 4)
    beta = -_27TH * (
        216 * a ** 2 * lam ** 6
        - 648 * a * b ** 2 * lam ** 4 * mu ** 2
        + 36 * a * b ** 3 * lam ** 3 * mu ** 3
        + b ** 6 * mu ** 6
    )
    gamma = 1024 * a ** 3 * lam ** 10
    delta = _1024_3 * a ** 3 * lam ** 10 * (
        12 * lam ** 2 - 12 * b * lam * mu + b ** 2 * mu ** 2
    )
    return (alpha, beta, gamma, delta)


def _pencil_228(c, d, lam, mu):
    alpha = _NINTH * (
        d ** 4 * lam ** 4
        - 4 * d ** 3 * lam ** 3 * mu
        - 24 * c * d * lam ** 3 * mu
        + 6 * d ** 2 * lam ** 2 * mu ** 2
        + 168 * c * lam ** 2 * mu ** 2
        - 4 * d * lam * mu ** 3
        + mu ** 4
    )
    beta = -_27TH * (
        d ** 6 * lam ** 6
        - 6 * d ** 5 * lam ** 5 * mu
        - 36 * c * d ** 3 * lam ** 5 * mu
        + 15 * d ** 4 * lam ** 4 * mu ** 2
        - 540 * c * d ** 2 * lam ** 4 * mu ** 2
        - 20 * d ** 3 * lam ** 3 * mu ** 3
        + 216 * c ** 2 * lam ** 4 * mu ** 2
        + 1188 * c * d * lam ** 3 * mu ** 3
        + 15 * d ** 2 * lam ** 2 * mu ** 4
        - 612 * c * lam ** 2 * mu ** 4
        - 6 * d * lam * mu ** 5
        + mu ** 6
    )
    gamma = 1024 * c ** 3 * mu ** 4 * lam ** 6
    delta = _1024_3 * c ** 3 * mu ** 4 * lam ** 6 * (
        d ** 2 * lam ** 2 + 10 * d * lam * mu + mu ** 2
    )
    return (alpha, beta, gamma, delta)


def _pencil_21(c, lam, mu):
    # printed first coordinate is lambda^(2/3); rescaling the weighted
    # point by t = lambda^(2/3) clears it to honest polynomials
    alpha = lam ** 2
    beta = lam ** 2 * (1728 * c * mu ** 2 - lam ** 2 + 864 * lam * mu)
    delta = (2 ** 12) * (3 ** 6) * c * lam ** 4 * (c * mu + lam) * mu ** 3
    return (alpha, beta, delta)


_FAMILIES = {
    "2.1": (_pencil_21, 1, WEIGHTS_236),
    "2.28": (_pencil_228, 2, WEIGHTS_2356),
    "2.33-pencil": (_pencil_233, 2, WEIGHTS_2356),
}


def period_map_eval(family, params, point):
    """Evaluate the printed pencil period map.

    family: one of "2.1" (params (c,)), "2.28" (params (c,d)),
    "2.33-pencil" (params (a,b)); point = (lambda, mu).
    """
    if family not in _FAMILIES:
        raise ValueError("unknown pencil family %r (have %s)"
                         % (family, ", ".join(sorted(_FAMILIES))))
    fn, nparams, _ = _FAMILIES[family]
    params = tuple(params)
    if len(params) != nparams:
        raise ValueError("family %s takes %d parameter(s), got %d"
                         % (family, nparams, len(params)))
    lam, mu = point
    return fn(*params, lam, mu)


def period_weights(family):
    if family not in _FAMILIES:
        raise ValueError("unknown pencil family %r" % (family,))
    return _FAMILIES[family][2]


def wp_equal(p1, p2, weights):
    """Equality in weighted projective space by cross-power elimination.

    True iff some nonzero t has p2[i] = t**weights[i] * p1[i] for all i.
    Multiplication-only, so symbolic coordinates work too.
    """
    p1, p2, weights = tuple(p1), tuple(p2), tuple(weights)
    if not (len(p1) == len(p2) == len(weights)):
        raise ValueError("coordinate/weight length mismatch")
    z1 = [x == 0 for x in p1]
    z2 = [x == 0 for x in p2]
    if all(z1) or all(z2):
        raise ValueError("all-zero tuple is not a weighted projective point")
    if z1 != z2:
        return False
    live = [i for i, z in enumerate(z1) if not z]
    for i, j in combinations(live, 2):
        if p1[i] ** weights[j] * p2[j] ** weights[i] != p2[i] ** weights[j] * p1[j] ** weights[i]:
            return False
    return True
