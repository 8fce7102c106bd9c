"""Degree-by-degree linear algebra for J(f) = (f_1, ..., f_n) and M(f) = S/J(f).

Only degrees 0..T+1 matter for a complete intersection with socle degree
T, so each degree piece J_d is materialized as the span of the shifted
generators m*f_j and reduced once.  No Groebner bases are involved.  The
standard monomials of degree d are the non-pivot columns of the reduced
echelon basis, with columns in graded-lex descending order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import linalg
from .errors import DegreeError, InvariantBreach, NotCompleteIntersection, VariableSpaceError
from .polycore.field import Field
from .polycore.poly import Poly, PolyRing, jacobian_det, mono_mul, monomial_index, monomials_of_degree


@dataclass(frozen=True)
class MultiDegree:
    degrees: tuple

    def __post_init__(self):
        d = tuple(int(x) for x in self.degrees)
        object.__setattr__(self, "degrees", d)
        if len(d) < 3:
            raise ValueError(f"need at least 3 variables, got {len(d)}")
        if min(d) < 2:
            raise ValueError(f"all degrees must be >= 2, got {d}")
        if list(d) != sorted(d):
            raise ValueError(f"multidegree must be nondecreasing, got {d}")

    @classmethod
    def parse(cls, text: str) -> "MultiDegree":
        try:
            return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
        except ValueError as exc:
            raise ValueError(f"bad multidegree {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def T(self) -> int:
        return socle_degree(self.degrees)

    def __str__(self):
        return ",".join(map(str, self.degrees))


def socle_degree(degrees) -> int:
    return sum(degrees) - len(degrees)


def ci_hilbert_series(degrees, upto: int) -> list:
    """Coefficients of prod (1 - t^d_j) / (1 - t)^n through t^upto."""
    coeffs = [1] + [0] * upto
    for d in degrees:
        # multiply by 1 + t + ... + t^(d-1)
        new = [0] * (upto + 1)
        for i, c in enumerate(coeffs):
            if c:
                for k in range(d):
                    if i + k > upto:
                        break
                    new[i + k] += c
        coeffs = new
    return coeffs


@dataclass(frozen=True)
class SystemInput:
    """n homogeneous forms in n variables (CI-ness is certified separately)."""

    forms: tuple
    ring: PolyRing = None

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if not forms:
            raise ValueError("empty system")
        ring = self.ring or forms[0].ring
        object.__setattr__(self, "ring", ring)
        if ring.space != "x":
            raise VariableSpaceError("systems live in the primal x-variables")
        if any(f.ring != ring for f in forms):
            raise VariableSpaceError("all generators must share one ring")
        if ring.n < 3:
            raise ValueError(f"need n >= 3 variables, got {ring.n}")
        if len(forms) != ring.n:
            raise ValueError(f"need exactly {ring.n} generators, got {len(forms)}")
        for j, f in enumerate(forms):
            if f.degree < 2:
                raise DegreeError(f"generator {j + 1} has degree {f.degree}; all degrees must be >= 2")

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def field(self) -> Field:
        return self.ring.field

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree for f in self.forms)

    @property
    def T(self) -> int:
        return socle_degree(self.degrees)

    def to_field(self, field: Field) -> "SystemInput":
        return SystemInput(tuple(f.to_field(field) for f in self.forms))


@dataclass(frozen=True)
class DegreePiece:
    """Reduced echelon basis of J_d and the standard monomials spanning M_d."""

    degree: int
    n: int
    field: Field
    basis: tuple
    pivots: tuple
    standard: tuple = dc_field(init=False)

    def __post_init__(self):
        mons = monomials_of_degree(self.n, self.degree)
        piv = set(self.pivots)
        object.__setattr__(self, "standard", tuple(m for i, m in enumerate(mons) if i not in piv))

    @property
    def monomials(self) -> tuple:
        return monomials_of_degree(self.n, self.degree)

    @property
    def dim_ideal(self) -> int:
        return len(self.pivots)

    @property
    def dim_quotient(self) -> int:
        return len(self.standard)

    @cached_property
    def _standard_columns(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(len(self.monomials)) if i not in piv)

    @cached_property
    def nf_table(self) -> dict:
        """Monomial -> coordinates of its normal form on the standard monomials."""
        field = self.field
        cols = self._standard_columns
        table = {}
        for k, m in enumerate(self.standard):
            coords = [field.zero] * len(cols)
            coords[k] = field.one
            table[m] = tuple(coords)
        mons = self.monomials
        for row, c in zip(self.basis, self.pivots):
            table[mons[c]] = tuple(field(-row[j]) for j in cols)
        return table

    def reduce(self, terms) -> list:
        """Normal-form coordinates of ``{monomial: coeff}`` of this degree."""
        field = self.field
        out = [field.zero] * self.dim_quotient
        table = self.nf_table
        for m, c in terms.items():
            for k, v in enumerate(table[m]):
                if v:
                    out[k] += c * v
        return [field(v) for v in out]

    def contains(self, terms) -> bool:
        return not any(self.reduce(terms))


def span_piece(forms, ring: PolyRing, d: int) -> DegreePiece:
    """Degree-d piece of the ideal generated by ``forms`` (any degrees)."""
    n = ring.n
    index = monomial_index(n, d)
    field = ring.field
    rows = []
    for f in forms:
        if f.is_zero() or f.degree > d:
            continue
        for m in monomials_of_degree(n, d - f.degree):
            row = [field.zero] * len(index)
            for mf, c in f.terms.items():
                row[index[mono_mul(m, mf)]] = c
            rows.append(row)
    basis, pivots = linalg.rref(rows, len(index), field)
    return DegreePiece(d, n, field, tuple(tuple(r) for r in basis), tuple(pivots))


def span_rank(forms, ring: PolyRing, d: int) -> int:
    """dim of the degree-d piece, without the reduced basis."""
    n = ring.n
    index = monomial_index(n, d)
    field = ring.field
    rows = []
    for f in forms:
        if f.is_zero() or f.degree > d:
            continue
        for m in monomials_of_degree(n, d - f.degree):
            row = [field.zero] * len(index)
            for mf, c in f.terms.items():
                row[index[mono_mul(m, mf)]] = c
            rows.append(row)
    return linalg.rank(rows, len(index), field)


def ideal_degree_piece(sys: SystemInput, d: int) -> DegreePiece:
    if d < 0:
        raise DegreeError(f"negative degree {d}")
    return span_piece(sys.forms, sys.ring, d)


@dataclass(frozen=True)
class CIVerdict:
    is_ci: bool
    failure_degree: int | None
    hilbert: tuple
    expected: tuple

    def __bool__(self):
        return self.is_ci


class GradedQuotient:
    """The algebra M(f) tabulated in degrees 0..T+1.

    Construction never fails for a valid :class:`SystemInput`; operations that
    need a complete intersection call :meth:`require_ci`.
    """

    def __init__(self, sys: SystemInput):
        self.sys = sys
        self.T = sys.T
        self.pieces = tuple(ideal_degree_piece(sys, d) for d in range(self.T + 2))
        self.hilbert = tuple(p.dim_quotient for p in self.pieces)
        self.expected = tuple(ci_hilbert_series(sys.degrees, self.T + 1))

    @property
    def ring(self) -> PolyRing:
        return self.sys.ring

    @property
    def field(self) -> Field:
        return self.sys.field

    @property
    def n(self) -> int:
        return self.sys.n

    def piece(self, d: int) -> DegreePiece:
        if not 0 <= d <= self.T + 1:
            raise DegreeError(f"degree {d} outside the tabulated range 0..{self.T + 1}")
        return self.pieces[d]

    @cached_property
    def ci_verdict(self) -> CIVerdict:
        for d, (h, e) in enumerate(zip(self.hilbert, self.expected)):
            if h != e:
                return CIVerdict(False, d, self.hilbert, self.expected)
        return CIVerdict(True, None, self.hilbert, self.expected)

    @property
    def is_ci(self) -> bool:
        return self.ci_verdict.is_ci

    def require_ci(self):
        v = self.ci_verdict
        if not v.is_ci:
            raise NotCompleteIntersection(v.failure_degree, v.hilbert)

    def standard(self, d: int) -> tuple:
        return self.piece(d).standard

    def normal_form(self, p: Poly) -> Poly:
        """Unique representative of p supported on standard monomials."""
        if p.ring != self.ring:
            raise VariableSpaceError("polynomial is not in the ring of the system")
        piece = self.piece(p.degree)
        coords = piece.reduce(p.terms)
        return Poly(self.ring, dict(zip(piece.standard, coords)), p.degree)

    def nf_coords(self, p: Poly) -> list:
        return self.piece(p.degree).reduce(p.terms)

    @cached_property
    def jacobian(self) -> Poly:
        return jacobian_det(self.sys.forms)

    @cached_property
    def socle(self) -> "SocleData":
        return socle_functional(self)


def certify_complete_intersection(sys_or_q) -> CIVerdict:
    q = sys_or_q if isinstance(sys_or_q, GradedQuotient) else GradedQuotient(sys_or_q)
    return q.ci_verdict


def normal_form(q: GradedQuotient, p: Poly) -> Poly:
    return q.normal_form(p)


def hilbert_function(q: GradedQuotient) -> tuple:
    return q.hilbert


@dataclass(frozen=True)
class SocleData:
    """Socle monomial m_T, scalar c with NF(Jac) = c*m_T, and omega(m_T) = 1/c."""

    monomial: tuple
    c: object
    omega_of_monomial: object
    quotient: GradedQuotient = dc_field(repr=False, compare=False)

    def omega(self, p) -> object:
        """omega on a degree-T polynomial (or ``{monomial: coeff}`` mapping)."""
        q = self.quotient
        terms = p.terms if isinstance(p, Poly) else p
        (coord,) = q.piece(q.T).reduce(terms)
        return q.field(coord * self.omega_of_monomial)


def socle_functional(q: GradedQuotient) -> SocleData:
    q.require_ci()
    T = q.T
    piece = q.piece(T)
    if piece.dim_quotient != 1:
        raise InvariantBreach(f"socle of a certified CI has dimension {piece.dim_quotient}")
    (m_T,) = piece.standard
    (c,) = piece.reduce(q.jacobian.terms)
    if c == 0:
        raise InvariantBreach("Jacobian determinant vanishes in the socle")
    return SocleData(m_T, c, q.field.inv(c), q)


def multiplication_matrix(q: GradedQuotient, mult: Poly, k: int) -> list:
    """Matrix of M_k -> M_{k+e}, p -> mult*p; row i is the image of the i-th standard monomial."""
    q.require_ci()
    if mult.ring != q.ring:
        raise VariableSpaceError("multiplier is not in the ring of the system")
    if k < 0:
        raise DegreeError(f"negative degree {k}")
    e = mult.degree
    if k + e > q.T + 1:
        raise DegreeError(f"target degree {k + e} exceeds T+1 = {q.T + 1}")
    source = q.piece(k).standard
    target = q.piece(k + e)
    field = q.field
    rows = []
    for m in source:
        terms = {}
        for mm, c in mult.terms.items():
            key = mono_mul(m, mm)
            terms[key] = field(terms.get(key, 0) + c)
        rows.append(target.reduce(terms))
    return rows


def pairing_matrix(q: GradedQuotient, k: int) -> list:
    s = q.socle
    T = q.T
    if not 0 <= k <= T:
        raise DegreeError(f"pairing degree {k} outside 0..{T}")
    top = q.piece(T)
    rows = []
    for a in q.piece(k).standard:
        row = []
        for b in q.piece(T - k).standard:
            (coord,) = top.reduce({mono_mul(a, b): 1})
            row.append(q.field(coord * s.omega_of_monomial))
        rows.append(row)
    return rows


def gorenstein_pairing_check(q: GradedQuotient, k: int) -> bool:
    """The socle pairing M_k x M_{T-k} -> field is perfect."""
    q.require_ci()
    B = pairing_matrix(q, k)
    size = len(B)
    if size != len(q.piece(q.T - k).standard):
        return False
    return linalg.rank(B, size, q.field) == size
