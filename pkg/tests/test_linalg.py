from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from lefschetz_lab import linalg
from lefschetz_lab.polycore import QQ, Field

from oracles import leibniz_det, naive_rref

F101 = Field(101)


def matrices(max_rows=6, max_cols=6, bound=4):
    entry = st.fractions(min_value=-bound, max_value=bound, max_denominator=3)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: (rows, c)
            )
        )
    )


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_matches_naive_over_q(mc):
    rows, ncols = mc
    assert linalg.rref(rows, ncols, QQ) == naive_rref(rows, ncols, QQ)
    assert linalg.rank(rows, ncols, QQ) == len(naive_rref(rows, ncols, QQ)[1])


@settings(max_examples=150, deadline=None)
@given(matrices(bound=200))
def test_rref_matches_naive_mod_p(mc):
    rows, ncols = mc
    ints = [[int(v * 6) for v in r] for r in rows]
    assert linalg.rref(ints, ncols, F101) == naive_rref(ints, ncols, F101)
    assert linalg.rank(ints, ncols, F101) == len(naive_rref(ints, ncols, F101)[1])


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_is_annihilated_and_complementary(mc):
    rows, ncols = mc
    basis = linalg.kernel(rows, ncols, QQ)
    assert len(basis) + linalg.rank(rows, ncols, QQ) == ncols
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(M):
    assert linalg.det([[Fraction(v) for v in r] for r in M], QQ) == leibniz_det(M, QQ)
    assert linalg.det(M, F101) == leibniz_det(M, F101)


def test_rank_prefilter_survives_prime_collision():
    # singular mod 2**31 - 1 but regular over Q: the exact fallback must see it
    P = 2**31 - 1
    M = [[Fraction(P), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert linalg.rank(M, 2, QQ) == 2


def test_det_of_singular_matrix():
    assert linalg.det([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], QQ) == 0
    assert linalg.det([[1, 2], [3, 4]], Field(2**31 - 1)) == (-2) % (2**31 - 1)


def test_matmul():
    A = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    B = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert linalg.matmul(A, B, QQ) == [[2, 1], [4, 3]]
