from __future__ import annotations

import math
import random

import pytest

from lefschetz_lab import linalg
from lefschetz_lab.aci import (
    AciFixture,
    check_C1,
    in_offdiag_ideal,
    offdiag_ideal_basis,
    sample_aci,
    verify_thmA2,
    veronese_misses,
)
from lefschetz_lab.gradedalg import MultiDegree
from lefschetz_lab.polycore import QQ, Field, PolyRing, monomials_of_degree, parse_poly


def P(text):
    return parse_poly(text, ("x1", "x2", "x3"))


# offdiag_ideal_basis


def test_basis_examples():
    assert offdiag_ideal_basis(3, 2) == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert offdiag_ideal_basis(3, 1) == ()
    assert offdiag_ideal_basis(3, 0) == ()
    assert len(offdiag_ideal_basis(3, 3)) == 7


def test_basis_dimension_formula():
    for n in range(2, 6):
        for d in range(2, 7):
            assert len(offdiag_ideal_basis(n, d)) == math.comb(d + n - 1, n - 1) - n


def test_vanishing_ideal_of_coordinate_points():
    # kernel of evaluation at e_1..e_n on S_d is exactly K_d
    for n in (3, 4):
        for d in range(2, 6):
            mons = monomials_of_degree(n, d)
            points = [[int(i == j) for j in range(n)] for i in range(n)]
            rows = [[math.prod(p ** e for p, e in zip(pt, m)) for m in mons] for pt in points]
            kern = linalg.kernel(rows, len(mons), QQ)
            support = {mons[j] for v in kern for j, c in enumerate(v) if c}
            assert len(kern) == len(offdiag_ideal_basis(n, d))
            assert support == set(offdiag_ideal_basis(n, d))
            # the kernel basis is made of unit vectors on off-diagonal monomials
            assert all(sum(1 for c in v if c) == 1 for v in kern)


# sample_aci


def test_sample_is_reproducible_and_in_K():
    a = sample_aci(3, MultiDegree((2, 2, 2)), random.Random(7), seed=7)
    b = sample_aci(3, (2, 2, 2), random.Random(7), seed=7)
    assert a.generators == b.generators
    assert a.seed == 7
    for g in a.generators:
        assert in_offdiag_ideal(g)
        assert set(g.terms) == set(offdiag_ideal_basis(3, 2))
        assert all(1 <= abs(c) <= 50 for c in g.terms.values())


def test_sample_membership_other_degrees():
    fx = sample_aci(4, (2, 2, 3, 3), random.Random(1), bound=5)
    assert all(in_offdiag_ideal(g) for g in fx.generators)
    assert [g.degree for g in fx.generators] == [2, 2, 3, 3]


def test_genericity_smoke():
    singular = 0
    for seed in range(100):
        fx = sample_aci(3, (2, 2, 2), random.Random(seed))
        M = [[g.coeff(m) for m in offdiag_ideal_basis(3, 2)] for g in fx.generators]
        singular += linalg.det(M, QQ) == 0
    assert singular <= 2


def test_sample_rejects_bad_multidegree():
    with pytest.raises(ValueError):
        sample_aci(3, (2, 3, 2), random.Random(0))
    with pytest.raises(ValueError):
        sample_aci(3, (2, 2), random.Random(0))


def test_resample_flag():
    fx = sample_aci(3, (2, 2, 2), random.Random(0), bound=1, resample=True)
    assert verify_thmA2(fx).passed


# verify_thmA2


def test_generic_222():
    fx = sample_aci(3, (2, 2, 2), random.Random(3))
    rep = verify_thmA2(fx)
    assert rep.T == 3
    assert rep.dim_J_top == 3 == rep.dim_K_top
    assert rep.quotient_dim_top == 3
    assert rep.passed and rep.failures() == []


def test_adversarial_sample():
    ring = PolyRing.standard(3)
    gens = tuple(parse_poly(t, ring) for t in ("x1*x2", "x1*x2", "x1*x3"))
    rep = verify_thmA2(AciFixture(gens, (2, 2, 2)))
    assert rep.dim_J_top == 2
    assert not rep.claim1
    assert rep.failures()[0].startswith("claim (1)")


def test_generic_223():
    fx = sample_aci(3, (2, 2, 3), random.Random(5))
    rep = verify_thmA2(fx)
    assert rep.T == 4
    assert rep.dim_K_top == 7
    assert rep.quotient_dim_top == 3
    assert rep.passed


def test_containment_in_every_degree():
    fx = sample_aci(3, (2, 3, 3), random.Random(8))
    rep = verify_thmA2(fx)
    assert rep.containment
    assert all(j <= k for j, k in zip(rep.dims_ideal, rep.dims_K))


@pytest.mark.parametrize("degrees", [(2, 2, 2), (2, 2, 3)])
def test_pass_rate_over_200_seeds(degrees):
    passed = sum(verify_thmA2(sample_aci(3, degrees, random.Random(seed))).passed for seed in range(200))
    assert passed >= 198


# check_C1 and the Veronese miss


def test_C1_examples():
    assert check_C1(P("x1"), 3)
    assert check_C1(P("x1 + x2 + x3"), 3)
    with pytest.raises(ValueError):
        check_C1(P("x1 - x1"), 3)


def test_C1_mod_p():
    F = Field(65537)
    ring = PolyRing.standard(3, F)
    rng = random.Random(0)
    for _ in range(200):
        coeffs = [0, 0, 0]
        while not any(coeffs):
            coeffs = [rng.randrange(F.p) for _ in range(3)]
        assert check_C1(ring.linear_form(coeffs), 5)


def test_veronese_misses_generic_fixture():
    rng = random.Random(4)
    for degrees in [(2, 2, 2), (2, 2, 3)]:
        fx = sample_aci(3, degrees, rng)
        assert verify_thmA2(fx).passed
        ring = fx.ring
        for _ in range(100):
            coeffs = [0, 0, 0]
            while not any(coeffs):
                coeffs = [rng.randint(-50, 50) for _ in range(3)]
            assert veronese_misses(fx, ring.linear_form(coeffs))
