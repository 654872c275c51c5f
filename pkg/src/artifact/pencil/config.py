"""Family configuration for the pencil-to-lattice pipeline.

A config carries the ordered du Val singularity list of a general pencil
member, the curve classes spanning the rest of the intersection lattice,
the mixed intersection blocks (B | C), the Galois orbit partition, the
Picard lattice of the Fano side and, optionally, the expected discriminant
data to compare against.
"""

from fractions import Fraction

from ..lattice import FiniteQuadraticForm, IntegralLattice, cartan_matrix

ADE_FAMILIES = ("A", "D", "E")


class SingularPoint:
    def __init__(self, label, family, rank, note=None):
        family = family.upper()
        if family not in ADE_FAMILIES:
            raise ValueError("unknown du Val family %r" % family)
        if family == "A" and rank < 1:
            raise ValueError("A_n needs n >= 1")
        if family == "D" and rank < 4:
            raise ValueError("D_n needs n >= 4")
        if family == "E" and rank not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        self.label = label
        self.family = family
        self.rank = rank
        self.note = note  # free text, never parsed

    def cartan(self):
        return cartan_matrix(self.family, self.rank)

    def __repr__(self):
        return "%s=%s%d" % (self.label, self.family, self.rank)


class ExpectedData:
    """Printed discriminant data: generator orders plus form matrices.

    `factors` are the printed generator orders; B/Q describe the pencil-side
    form, B_dual/Q_dual the complement side. Any of the matrices may be
    omitted when the printed group is trivial.
    """

    def __init__(self, factors, B=None, Q=None, B_dual=None, Q_dual=None):
        self.factors = tuple(int(d) for d in factors)
        self.B = None if B is None else tuple(tuple(Fraction(x) for x in r) for r in B)
        self.Q = None if Q is None else tuple(Fraction(x) for x in Q)
        self.B_dual = (
            None if B_dual is None else tuple(tuple(Fraction(x) for x in r) for r in B_dual)
        )
        self.Q_dual = None if Q_dual is None else tuple(Fraction(x) for x in Q_dual)

    def form(self):
        if not self.factors:
            return FiniteQuadraticForm([], [], [])
        return FiniteQuadraticForm(self.factors, self.B, self.Q)

    def dual_form(self):
        if not self.factors:
            return FiniteQuadraticForm([], [], [])
        if self.B_dual is None or self.Q_dual is None:
            return None
        return FiniteQuadraticForm(self.factors, self.B_dual, self.Q_dual)


class PencilConfig:
    def __init__(
        self,
        family_id,
        singularities,
        curve_labels,
        mixed_B,
        mixed_C,
        galois_orbits,
        pic_gram,
        expected=None,
    ):
        self.family_id = str(family_id)
        self.singularities = list(singularities)
        labels = [s.label for s in self.singularities]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate singular point labels")
        self.curve_labels = list(curve_labels)
        self.mixed_B = [list(map(int, row)) for row in mixed_B]
        self.mixed_C = [list(map(int, row)) for row in mixed_C]
        exc_total = sum(s.rank for s in self.singularities)
        n_curves = len(self.curve_labels)
        if len(self.mixed_B) != n_curves or any(
            len(r) != exc_total for r in self.mixed_B
        ):
            raise ValueError(
                "mixed B must be %d x %d (curves x exceptional columns)"
                % (n_curves, exc_total)
            )
        if len(self.mixed_C) != n_curves or any(
            len(r) != n_curves for r in self.mixed_C
        ):
            raise ValueError("mixed C must be square of curve count")
        for i in range(n_curves):
            for j in range(n_curves):
                if self.mixed_C[i][j] != self.mixed_C[j][i]:
                    raise ValueError("mixed C must be symmetric")
        if isinstance(pic_gram, IntegralLattice):
            self.pic = pic_gram
        else:
            self.pic = IntegralLattice(pic_gram)
        self.expected = expected

        all_labels = self.generator_labels()
        seen = set()
        self.galois_orbits = []
        for orbit in galois_orbits:
            orbit = list(orbit)
            for member in orbit:
                if member not in all_labels:
                    raise ValueError("orbit references unknown label %r" % member)
                if member in seen:
                    raise ValueError("label %r appears in two orbits" % member)
                seen.add(member)
            self.galois_orbits.append(orbit)
        # implicit singletons for everything not mentioned
        for label in all_labels:
            if label not in seen:
                self.galois_orbits.append([label])
        order = {lab: i for i, lab in enumerate(all_labels)}
        self.galois_orbits.sort(key=lambda orb: min(order[m] for m in orb))

    def exceptional_labels(self):
        out = []
        for s in self.singularities:
            for j in range(1, s.rank + 1):
                out.append("%s.E%d" % (s.label, j))
        return out

    def generator_labels(self):
        return self.exceptional_labels() + list(self.curve_labels)

    def __repr__(self):
        return "PencilConfig(%s: %s; curves %s)" % (
            self.family_id,
            ",".join(repr(s) for s in self.singularities),
            ",".join(self.curve_labels),
        )


class LatticeReport:
    """Per-family verification outcome."""

    def __init__(self, family_id, checks, detail):
        self.family_id = family_id
        self.checks = dict(checks)
        self.detail = dict(detail)

    @property
    def passed(self):
        return all(self.checks.values())

    def status(self):
        return "PASS" if self.passed else "FAIL"

    def failing(self):
        return [k for k, v in self.checks.items() if not v]

    def summary_line(self):
        if self.passed:
            return "%-8s PASS  rank=%s factors=%s" % (
                self.family_id,
                self.detail.get("rank"),
                list(self.detail.get("factors", ())),
            )
        return "%-8s FAIL  (%s)" % (self.family_id, ", ".join(self.failing()))

    def lines(self):
        out = [self.summary_line()]
        for name in sorted(self.checks):
            out.append("    %-24s %s" % (name, "ok" if self.checks[name] else "FAIL"))
        return out
