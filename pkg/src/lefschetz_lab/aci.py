"""Almost complete intersections inside the off-diagonal ideal K = (x_i x_j : i < j).

Generic g_j in K_(d_j) generate an ideal J(g) whose saturation is K, the
vanishing ideal of the n coordinate points.  Everything here is checked
degree by degree: K_d is spanned by the non-pure-power monomials, and
J(g)_d comes from the same span/rank engine as M(f).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gradedalg import MultiDegree, span_piece
from .errors import DegreeError
from .polycore.field import QQ, Field
from .polycore.poly import Poly, PolyRing, linear_power_terms, monomials_of_degree


def offdiag_ideal_basis(n: int, d: int) -> tuple:
    """Monomial basis of K_d: every degree-d monomial except the pure powers."""
    if n < 2 or d < 0:
        raise ValueError(f"need n >= 2 and d >= 0, got n={n}, d={d}")
    return tuple(m for m in monomials_of_degree(n, d) if sum(1 for e in m if e) >= 2)


def in_offdiag_ideal(p: Poly) -> bool:
    return all(sum(1 for e in m if e) >= 2 for m in p.terms)


@dataclass(frozen=True)
class AciFixture:
    generators: tuple
    multidegree: tuple
    seed: int | None = None
    bound: int | None = None

    @property
    def ring(self) -> PolyRing:
        return self.generators[0].ring

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def T(self) -> int:
        return sum(self.multidegree) - len(self.multidegree)


MAX_RESAMPLES = 100


def sample_aci(n: int, d, rng, bound: int = 50, field: Field = QQ, seed: int | None = None,
               resample: bool = False) -> AciFixture:
    """Each g_j gets an independent nonzero coefficient in [-bound, bound] on every K_(d_j) monomial.

    Non-generic draws are returned as they are unless ``resample`` is set, in
    which case the sampler redraws until :func:`verify_thmA2` passes.
    """
    if resample:
        for _ in range(MAX_RESAMPLES):
            fx = sample_aci(n, d, rng, bound, field, seed)
            if verify_thmA2(fx).passed:
                return fx
        raise RuntimeError(f"no generic sample in {MAX_RESAMPLES} draws")
    degrees = d.degrees if isinstance(d, MultiDegree) else tuple(d)
    if len(degrees) != n:
        raise ValueError(f"multidegree {degrees} does not have {n} entries")
    if min(degrees) < 2 or list(degrees) != sorted(degrees):
        raise ValueError(f"need 2 <= d_1 <= ... <= d_n, got {degrees}")
    ring = PolyRing.standard(n, field)
    gens = []
    for dj in degrees:
        terms = {}
        for m in offdiag_ideal_basis(n, dj):
            c = 0
            while c == 0:
                c = rng.randint(-bound, bound)
            terms[m] = c
        gens.append(Poly(ring, terms, dj))
    return AciFixture(tuple(gens), degrees, seed, bound)


@dataclass(frozen=True)
class ThmA2Report:
    T: int
    dims_ideal: tuple
    dims_K: tuple
    containment: bool
    dim_J_top: int
    dim_K_top: int
    quotient_dim_top: int
    n: int

    @property
    def claim1(self) -> bool:
        """J(g)_(T-1) = K_(T-1) (with J(g)_d inside K_d in every degree)."""
        return self.containment and self.dim_J_top == self.dim_K_top

    @property
    def claim2(self) -> bool:
        """N(g)_1 = 0 (K_1 = 0) and N(g)_(T-1) = K_(T-1)/J(g)_(T-1) = 0."""
        return self.dims_K[1] - self.dims_ideal[1] == 0 and self.claim1

    @property
    def claim3(self) -> bool:
        return self.quotient_dim_top == self.n

    @property
    def passed(self) -> bool:
        return self.claim1 and self.claim2 and self.claim3

    def failures(self) -> list:
        out = []
        if not self.claim1:
            out.append("claim (1): J(g)_(T-1) != K_(T-1)")
        if not self.claim2:
            out.append("claim (2): N(g)_1 or N(g)_(T-1) nonzero")
        if not self.claim3:
            out.append(f"claim (3): dim (S/J(g))_(T-1) = {self.quotient_dim_top} != {self.n}")
        if out:
            out.append("sample is not generic; resample")
        return out


def verify_thmA2(fx: AciFixture) -> ThmA2Report:
    n, T = fx.n, fx.T
    if T < 2:
        raise DegreeError(f"socle degree {T} too small")
    ring = fx.ring
    dims_J, dims_K = [], []
    containment = True
    for d in range(T):
        piece = span_piece(fx.generators, ring, d)
        kbasis = set(offdiag_ideal_basis(n, d))
        mons = piece.monomials
        for row in piece.basis:
            if any(v and mons[j] not in kbasis for j, v in enumerate(row)):
                containment = False
        dims_J.append(piece.dim_ideal)
        dims_K.append(len(kbasis))
    top_total = len(monomials_of_degree(n, T - 1))
    return ThmA2Report(
        T=T,
        dims_ideal=tuple(dims_J),
        dims_K=tuple(dims_K),
        containment=containment,
        dim_J_top=dims_J[T - 1],
        dim_K_top=dims_K[T - 1],
        quotient_dim_top=top_total - dims_J[T - 1],
        n=n,
    )


def check_C1(ell: Poly, T: int) -> bool:
    """l^(T-1) is never in K_(T-1): some pure power of l^(T-1) survives."""
    if ell.degree != 1 or ell.is_zero():
        raise ValueError("need a nonzero linear form")
    if T < 2:
        raise DegreeError(f"need T >= 2, got {T}")
    n = ell.ring.n
    coeffs = [ell.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    field = ell.ring.field
    power = {m: field(c) for m, c in linear_power_terms(coeffs, T - 1)}
    return any(power.get(tuple(T - 1 if j == i else 0 for j in range(n)), 0) for i in range(n))


def veronese_misses(fx: AciFixture, ell: Poly) -> bool:
    """True when l^(T-1) is outside J(g)_(T-1)."""
    n, T = fx.n, fx.T
    piece = span_piece(fx.generators, fx.ring, T - 1)
    coeffs = [ell.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    return not piece.contains(dict(linear_power_terms(coeffs, T - 1)))
