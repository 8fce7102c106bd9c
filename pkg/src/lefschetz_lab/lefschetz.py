"""Strong Lefschetz checks: is l^(T-2k): M_k -> M_(T-k) an isomorphism?"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DegreeError
from .gradedalg import GradedQuotient, multiplication_matrix
from .polycore.field import Field
from .polycore.poly import Poly, PolyRing, _det, mono_mul, monomials_of_degree, multinomial

DEFAULT_COEFF_BOUND = 50


class Verdict(str, enum.Enum):
    HOLDS_WITH_WITNESS = "HOLDS_WITH_WITNESS"
    PROBABLY_FAILS = "PROBABLY_FAILS"
    FAILS_CERTIFIED = "FAILS_CERTIFIED"


@dataclass(frozen=True)
class SlpVerdict:
    k: int
    map_degree: int
    verdict: Verdict
    witness: Poly | None
    trials: int
    field: Field
    sample_size: int
    degree_bound: int
    failure_bound: Fraction | None = None

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS_WITH_WITNESS


@dataclass(frozen=True)
class Slp1Diagnostic:
    """Kernel of S_1 -> M_(T-1), v -> l^(T-2) v; a nonzero l_1 in it solves l^(T-2) l_1 in J."""

    ell: Poly
    kernel: tuple
    rank: int

    @property
    def fails(self) -> bool:
        return bool(self.kernel)


def _check_linear(ell: Poly, ring: PolyRing):
    if ell.ring != ring:
        raise ValueError("linear form is not in the ring of the system")
    if ell.degree != 1 or ell.is_zero():
        raise ValueError("need a nonzero linear form")


def _check_k(q: GradedQuotient, k: int):
    if not (0 <= k and 2 * k < q.T):
        raise DegreeError(f"k = {k} outside [0, T/2) with T = {q.T}")


def slp_matrix(q: GradedQuotient, k: int, ell: Poly) -> list:
    q.require_ci()
    _check_k(q, k)
    _check_linear(ell, q.ring)
    return multiplication_matrix(q, ell ** (q.T - 2 * k), k)


def slp_at_degree(q: GradedQuotient, k: int, ell: Poly) -> bool:
    M = slp_matrix(q, k, ell)
    size = q.hilbert[k]
    return linalg.rank(M, q.hilbert[q.T - k], q.field) == size


def symbolic_multiplication_matrix(q: GradedQuotient, k: int, e: int, aring: PolyRing) -> list:
    """Matrix of multiplication by (a_1 x_1 + ... + a_n x_n)^e on M_k, entries in a."""
    target = q.piece(k + e)
    field = q.field
    rows = []
    for m in q.piece(k).standard:
        entries = [dict() for _ in target.standard]
        for beta in monomials_of_degree(q.n, e):
            coords = target.nf_table[mono_mul(m, beta)]
            w = multinomial(beta)
            for j, v in enumerate(coords):
                if v:
                    entries[j][beta] = field(entries[j].get(beta, 0) + w * v)
        rows.append([Poly(aring, t, e) for t in entries])
    return rows


def slp_determinant(q: GradedQuotient, k: int) -> Poly:
    """det of the SLP map as a polynomial in the coefficients of a generic l."""
    aring = q.ring.coefficient_ring()
    e = q.T - 2 * k
    M = symbolic_multiplication_matrix(q, k, e, aring)
    return _det(M, aring, e * len(M))


def _sample_linear(q: GradedQuotient, rng, bound: int) -> list:
    field = q.field
    if field.p is None:
        return [rng.randint(-bound, bound) for _ in range(q.n)]
    return [rng.randrange(field.p) for _ in range(q.n)]


def slp_witness_search(
    q: GradedQuotient,
    k: int,
    trials: int,
    rng,
    bound: int = DEFAULT_COEFF_BOUND,
    certify_small: bool = True,
) -> SlpVerdict:
    """Sample linear forms until one makes the SLP map bijective.

    One witness certifies SLP in degree k.  Exhausting ``trials`` gives only a
    probabilistic failure, unless the determinant in the coefficients of l
    is expanded (hf(k) <= 3, over Q) and found to be identically zero.
    """
    q.require_ci()
    _check_k(q, k)
    if trials < 1:
        raise ValueError("need at least one trial")
    field = q.field
    e = q.T - 2 * k
    size = q.hilbert[k]
    sample_size = field.p if field.p is not None else 2 * bound + 1
    degree_bound = size * e
    for t in range(1, trials + 1):
        coeffs = _sample_linear(q, rng, bound)
        if not any(field(c) for c in coeffs):
            continue
        ell = q.ring.linear_form(coeffs)
        if slp_at_degree(q, k, ell):
            return SlpVerdict(k, e, Verdict.HOLDS_WITH_WITNESS, ell, t, field, sample_size, degree_bound)
    if certify_small and field.p is None and size <= 3:
        if slp_determinant(q, k).is_zero():
            return SlpVerdict(k, e, Verdict.FAILS_CERTIFIED, None, trials, field, sample_size, degree_bound)
    ratio = Fraction(degree_bound, sample_size)
    bound_value = min(Fraction(1), ratio) ** trials
    return SlpVerdict(k, e, Verdict.PROBABLY_FAILS, None, trials, field, sample_size, degree_bound, bound_value)


def slp1_kernel(q: GradedQuotient, ell: Poly) -> Slp1Diagnostic:
    q.require_ci()
    _check_linear(ell, q.ring)
    T = q.T
    power = ell ** (T - 2)
    target = q.piece(T - 1)
    field = q.field
    images = []
    for v in q.ring.gens():
        images.append(target.reduce((power * v).terms))
    # v -> sum v_i images_i; kernel of the transpose
    transpose = [[images[i][j] for i in range(q.n)] for j in range(len(target.standard))]
    basis = linalg.kernel(transpose, q.n, field)
    kern = tuple(q.ring.linear_form(vec) for vec in basis)
    return Slp1Diagnostic(ell, kern, q.n - len(kern))
