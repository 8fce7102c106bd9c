"""Projective certificates for the associated form and the Veronese variety.

Condition (1): the hypersurface A_f = 0 is smooth.
Condition (2): no power l^(T-1) of a nonzero linear form lies in J_(T-1).

Both reduce to deciding whether n forms of a common degree e have only the
trivial common zero.  If they do, they form a regular sequence and the
quotient vanishes from degree n(e-1)+1 on; if they share a projective zero,
evaluation there is a nonzero functional on the quotient in every degree.
So one rank computation at D = n(e-1)+1 decides the question.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .assocform import AssociatedForm
from .errors import DegreeError, VariableSpaceError
from .gradedalg import GradedQuotient, span_piece, span_rank
from .lefschetz import symbolic_multiplication_matrix
from .polycore.field import Field
from .polycore.poly import Poly, PolyRing, linear_power_terms, monomial_index, monomials_of_degree


def veronese_power(ell: Poly, m: int) -> Poly:
    """l^m, expanded by the multinomial theorem."""
    if ell.degree != 1:
        raise DegreeError("veronese_power needs a linear form")
    if m < 1:
        raise ValueError("power must be >= 1")
    coeffs = [ell.coeff(tuple(1 if j == i else 0 for j in range(ell.ring.n))) for i in range(ell.ring.n)]
    return Poly(ell.ring, dict(linear_power_terms(coeffs, m)), m)


@dataclass(frozen=True)
class ArtinianCertificate:
    forms: tuple
    degree: int
    decision_degree: int
    quotient_dim: int
    verdict: bool
    field: Field

    def __bool__(self):
        return self.verdict


def is_artinian_system(forms) -> ArtinianCertificate:
    """Do n forms of equal degree in n variables have only the trivial common zero?"""
    forms = tuple(forms)
    if not forms:
        raise ValueError("empty system")
    ring = forms[0].ring
    if any(f.ring != ring for f in forms):
        raise VariableSpaceError("forms must share one ring")
    if len(forms) != ring.n:
        raise ValueError(f"need {ring.n} forms in {ring.n} variables, got {len(forms)}")
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise DegreeError(f"forms must have equal degree, got {sorted(degrees)}")
    (e,) = degrees
    if e < 1:
        raise DegreeError("forms must have positive degree")
    D = ring.n * (e - 1) + 1
    total = len(monomials_of_degree(ring.n, D))
    dim = total - span_rank(forms, ring, D)
    return ArtinianCertificate(forms, e, D, dim, dim == 0, ring.field)


def condition_smooth_assocform(A: AssociatedForm | Poly) -> ArtinianCertificate:
    """A = 0 is smooth iff the partials of A have no common projective zero."""
    F = A.form if isinstance(A, AssociatedForm) else A
    if F.is_zero():
        raise ValueError("zero form")
    if F.degree < 2:
        raise DegreeError(f"need degree >= 2, got {F.degree}")
    return is_artinian_system([F.partial(i) for i in range(F.ring.n)])


def veronese_coordinate_forms(q: GradedQuotient) -> tuple:
    """h_i(a): coordinate of NF((a_1 x_1 + ... + a_n x_n)^(T-1)) on the i-th standard monomial."""
    q.require_ci()
    aring = q.ring.coefficient_ring()
    (row,) = symbolic_multiplication_matrix(q, 0, q.T - 1, aring)
    return tuple(row)


@dataclass(frozen=True)
class VeroneseCertificate:
    h_forms: tuple
    artinian: ArtinianCertificate
    witness: Poly | None

    @property
    def verdict(self) -> bool:
        return self.artinian.verdict

    def __bool__(self):
        return self.verdict


def _is_veronese_witness(q: GradedQuotient, coeffs) -> bool:
    field = q.field
    coeffs = [field(c) for c in coeffs]
    if not any(coeffs):
        return False
    power = dict(linear_power_terms(coeffs, q.T - 1))
    return q.piece(q.T - 1).contains(power)


def _point_from_dual(q: GradedQuotient, art: ArtinianCertificate, aring: PolyRing):
    """Read a common zero off a 1-dimensional quotient at the decision degree.

    The only functional on (R/I)_D is then evaluation at the unique common
    zero p, i.e. the vector (p^alpha) up to scale.
    """
    if art.quotient_dim != 1:
        return None
    field = q.field
    piece = span_piece(art.forms, aring, art.decision_degree)
    (free,) = piece.standard
    # annihilator of J_D: functional with value 1 on the standard monomial
    values = {free: field.one}
    for m, coords in piece.nf_table.items():
        values[m] = coords[0]
    n = q.n
    D = art.decision_degree
    for i in range(n):
        pure = tuple(D if j == i else 0 for j in range(n))
        base = values.get(pure, field.zero)
        if base:
            point = []
            for j in range(n):
                m = tuple(D - 1 if t == i else (1 if t == j else 0) for t in range(n)) if j != i else pure
                point.append(field.div(values[m], base))
            return point
    return None


def _points_numeric(art: ArtinianCertificate, aring: PolyRing, seed: int = 0):
    """Candidate rational common zeros from the eigenstructure of the dual space at D.

    Functionals vanishing on I_D include evaluation at every common zero p.
    Contracting such a functional by x_i multiplies it by p_i, so the p_i
    are joint eigenvalues of the contraction operators.  The computation is
    in floating point; callers must verify every candidate exactly.
    """
    n = aring.n
    D = art.decision_degree
    piece = span_piece(art.forms, aring, D)
    r = piece.dim_quotient
    if r == 0 or piece.field.p is not None:
        return []
    mons = piece.monomials
    N = len(mons)
    B = np.array([[float(v) for v in row] for row in piece.basis], dtype=float).reshape(len(piece.basis), N)
    if len(piece.basis):
        _, _, vt = np.linalg.svd(B)
        V = vt[len(piece.basis):].T
    else:
        V = np.eye(N)
    lower = monomials_of_degree(n, D - 1)
    index = monomial_index(n, D)
    contract = []
    for i in range(n):
        C = np.zeros((len(lower), N))
        for row, m in enumerate(lower):
            C[row, index[tuple(e + (j == i) for j, e in enumerate(m))]] = 1.0
        contract.append(C @ V)
    rng = np.random.default_rng(seed)
    base = sum(c * C for c, C in zip(rng.uniform(1, 2, n), contract))
    ops = [np.linalg.lstsq(base, C, rcond=None)[0] for C in contract]
    mix = sum(c * A for c, A in zip(rng.uniform(-1, 1, n), ops))
    _, vecs = np.linalg.eig(mix)
    out = []
    for u in vecs.T:
        t = np.array([np.vdot(u, A @ u) / np.vdot(u, u) for A in ops])
        if np.max(np.abs(t.imag)) > 1e-6 * max(1.0, np.max(np.abs(t))):
            continue
        t = t.real
        lead = t[np.argmax(np.abs(t))]
        if abs(lead) < 1e-12:
            continue
        fracs = [Fraction(float(v / lead)).limit_denominator(10**4) for v in t]
        den = math.lcm(*(f.denominator for f in fracs))
        out.append([int(f * den) for f in fracs])
    return out


def _small_vectors(n: int, radius: int):
    seen = set()
    for r in range(1, radius + 1):
        for vec in itertools.product(range(-r, r + 1), repeat=n):
            if not any(vec) or vec in seen:
                continue
            first = next(v for v in vec if v)
            if first < 0:
                continue
            seen.add(vec)
            yield vec


def find_veronese_witness(q: GradedQuotient, art: ArtinianCertificate | None = None, rng=None, tries: int = 200):
    """Best-effort search for l != 0 with l^(T-1) in J_(T-1); returns coefficients or None."""
    n = q.n
    for i in range(n):
        vec = [1 if j == i else 0 for j in range(n)]
        if _is_veronese_witness(q, vec):
            return vec
    if art is not None:
        point = _point_from_dual(q, art, q.ring.coefficient_ring())
        if point is not None and _is_veronese_witness(q, point):
            return point
    for vec in _small_vectors(n, 2):
        if _is_veronese_witness(q, vec):
            return list(vec)
    if art is not None:
        for vec in _points_numeric(art, q.ring.coefficient_ring()):
            if _is_veronese_witness(q, vec):
                return vec
    if rng is not None:
        field = q.field
        for _ in range(tries):
            if field.p is not None:
                vec = [rng.randrange(field.p) for _ in range(n)]
            else:
                vec = [rng.randint(-10, 10) for _ in range(n)]
            if _is_veronese_witness(q, vec):
                return vec
    return None


def condition_veronese_empty(q: GradedQuotient, rng=None) -> VeroneseCertificate:
    """P(J_(T-1)) misses the Veronese variety iff the h-forms are Artinian."""
    h = veronese_coordinate_forms(q)
    art = is_artinian_system(h)
    witness = None
    if not art.verdict:
        vec = find_veronese_witness(q, art, rng)
        if vec is not None:
            witness = q.ring.linear_form(vec)
    return VeroneseCertificate(h, art, witness)


def thmA3_consistency(q: GradedQuotient, A: AssociatedForm) -> bool:
    """Conditions (1) and (2) must agree; disagreement means a bug."""
    return condition_smooth_assocform(A).verdict == condition_veronese_empty(q).verdict
