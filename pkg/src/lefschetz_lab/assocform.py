"""The associated form A_f(y) = omega((y_1 x_1 + ... + y_n x_n)^T) and its apolar ideal."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import DegreeError, InvariantBreach, VariableSpaceError
from .gradedalg import GradedQuotient, SocleData, SystemInput
from .polycore.poly import Poly, PolyRing, apolar_apply, gradient, monomial_index, monomials_of_degree, multinomial


@dataclass(frozen=True)
class AssociatedForm:
    form: Poly
    socle: SocleData = dc_field(repr=False, compare=False)
    omega_values: dict = dc_field(repr=False, compare=False, default_factory=dict)

    @property
    def degree(self) -> int:
        return self.form.degree

    def projective(self) -> Poly:
        """Rescaling whose leading (graded-lex largest) coefficient is 1."""
        (m, c), *_ = self.form.sorted_terms()
        return self.form.scale(self.form.ring.field.inv(c))


def associated_form(q: GradedQuotient, s: SocleData | None = None) -> AssociatedForm:
    """Closed formula: coefficient of y^alpha is multinomial(T; alpha) * omega(x^alpha)."""
    q.require_ci()
    s = s or q.socle
    T = q.T
    field = q.field
    top = q.piece(T)
    values = {}
    terms = {}
    for alpha in monomials_of_degree(q.n, T):
        (coord,) = top.nf_table[alpha]
        w = field(coord * s.omega_of_monomial)
        values[alpha] = w
        if w:
            terms[alpha] = field(multinomial(alpha) * w)
    form = Poly(q.ring.dual(), terms, T)
    if form.is_zero():
        raise InvariantBreach("associated form vanishes identically")
    return AssociatedForm(form, s, values)


@dataclass(frozen=True)
class ApolarReport:
    ann_dims: tuple
    ideal_dims: tuple
    generators_annihilate: bool

    @property
    def equal(self) -> bool:
        return self.generators_annihilate and self.ann_dims == self.ideal_dims


def catalecticant(F: Poly, d: int, xring: PolyRing | None = None) -> list:
    """Matrix of S_d -> R_{T-d}, g -> g o F; row i is the image of the i-th monomial."""
    if F.ring.space != "y":
        raise VariableSpaceError("catalecticant needs a dual form")
    if not 0 <= d <= F.degree:
        raise DegreeError(f"degree {d} outside 0..{F.degree}")
    n = F.ring.n
    field = F.ring.field
    target = monomial_index(n, F.degree - d)
    rows = []
    xring = xring or PolyRing.standard(n, field, "x")
    for m in monomials_of_degree(n, d):
        img = apolar_apply(xring.monomial(m), F)
        row = [field.zero] * len(target)
        for mm, c in img.terms.items():
            row[target[mm]] = c
        rows.append(row)
    return rows


def apolar_annihilator_dims(A: AssociatedForm, q: GradedQuotient) -> ApolarReport:
    F = A.form
    T = F.degree
    field = F.ring.field
    ann = []
    for d in range(T + 1):
        rows = catalecticant(F, d, q.ring)
        ncols = len(monomials_of_degree(F.ring.n, T - d))
        ann.append(len(rows) - linalg.rank(rows, ncols, field))
    ideal = tuple(q.piece(d).dim_ideal for d in range(T + 1))
    annihilate = all(apolar_apply(f, F).is_zero() for f in q.sys.forms)
    return ApolarReport(tuple(ann), ideal, annihilate)


def milnor_system(f: Poly) -> SystemInput:
    """Gradient system of f; its socle degree is n(deg f - 2).

    Smoothness of f = 0 is equivalent to the system being a complete
    intersection, which the caller certifies.
    """
    if f.degree < 3:
        raise DegreeError(f"Milnor algebra needs deg f >= 3, got {f.degree}")
    return SystemInput(gradient(f))
