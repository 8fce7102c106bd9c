"""Exact dense linear algebra over Q and F_p.

Matrices are lists of rows of canonical field scalars.  Over F_p the work
is done on int64 numpy arrays (residues stay below 2**31, so products fit).
Over Q rows are scaled to integers and reduced by fraction-free Bareiss
elimination; fractions only appear in the final normalization of a reduced
echelon form.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .polycore.field import Field

# modular prefilter for rank over Q; a full rank mod P is full over Q
_FILTER_PRIME = 2147483647


def _as_mod_array(rows, ncols, p):
    if not rows:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array([[int(v) % p for v in row] for row in rows], dtype=np.int64).reshape(len(rows), ncols)


def _echelon_mod(A, p, reduced):
    A = A.copy()
    nrows, ncols = A.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        if reduced:
            col = A[:, c].copy()
            col[r] = 0
        else:
            col = np.zeros(nrows, dtype=np.int64)
            col[r + 1:] = A[r + 1:, c]
        targets = np.flatnonzero(col)
        if targets.size:
            A[targets] = (A[targets] - np.outer(col[targets], A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for v in row:
            if v.denominator != 1:
                den = den * v.denominator // math.gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def bareiss_echelon(M):
    """Fraction-free forward elimination on an integer matrix (modified in place).

    Returns ``(rows, pivots, sign)``; entries of the echelon rows are minors of
    the input, so every division is exact.  ``sign`` records row swaps.
    """
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    prev = 1
    r = 0
    sign = 1
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = next((i for i in range(r, nrows) if M[i][c]), None)
        if i is None:
            continue
        if i != r:
            M[r], M[i] = M[i], M[r]
            sign = -sign
        piv_row = M[r]
        pv = piv_row[c]
        for i in range(r + 1, nrows):
            row = M[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j] - a * piv_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = pv * row[j] // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return M[:r], pivots, sign


def rref(rows, ncols: int, field: Field):
    """Reduced row echelon form: ``(basis_rows, pivot_columns)``."""
    rows = [list(r) for r in rows]
    if field.p is not None:
        A, pivots = _echelon_mod(_as_mod_array(rows, ncols, field.p), field.p, reduced=True)
        return [[int(v) for v in row] for row in A], pivots
    if not rows:
        return [], []
    echelon, pivots, _ = bareiss_echelon(_integer_rows(rows))
    out = [[Fraction(v) for v in row] for row in echelon]
    for k in range(len(out) - 1, -1, -1):
        c = pivots[k]
        pv = out[k][c]
        out[k] = [v / pv for v in out[k]]
        for i in range(k):
            a = out[i][c]
            if a:
                out[i] = [x - a * y for x, y in zip(out[i], out[k])]
    return out, pivots


def rank(rows, ncols: int, field: Field) -> int:
    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return 0
    if field.p is not None:
        return len(_echelon_mod(_as_mod_array(rows, ncols, field.p), field.p, reduced=False)[1])
    ints = _integer_rows(rows)
    full = min(len(ints), ncols)
    fast = len(_echelon_mod(_as_mod_array(ints, ncols, _FILTER_PRIME), _FILTER_PRIME, reduced=False)[1])
    if fast == full:
        return fast
    return len(bareiss_echelon(ints)[1])


def kernel(rows, ncols: int, field: Field):
    """Basis of the right kernel {v : M v = 0}."""
    basis, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for row, c in zip(basis, pivots):
            v[c] = field(-row[f])
        out.append(v)
    return out


def det(rows, field: Field):
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return field.one
    if field.p is not None:
        p = field.p
        A = _as_mod_array(rows, size, p)
        result = 1
        for c in range(size):
            nz = np.flatnonzero(A[c:, c])
            if nz.size == 0:
                return 0
            i = c + int(nz[0])
            if i != c:
                A[[c, i]] = A[[i, c]]
                result = -result
            pv = int(A[c, c])
            result = result * pv % p
            inv = pow(pv, -1, p)
            below = A[c + 1:, c] * inv % p
            A[c + 1:] = (A[c + 1:] - np.outer(below, A[c]) % p) % p
        return result % p
    den = 1
    for row in rows:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [[int(v * den) for v in row] for row in rows]
    echelon, pivots, sign = bareiss_echelon(ints)
    if len(pivots) < size:
        return Fraction(0)
    return Fraction(sign * echelon[-1][-1], den**size)


def matmul(A, B, field: Field):
    """Exact product of two matrices given as lists of rows."""
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [
        [field(sum(A[i][k] * B[k][j] for k in range(inner))) for j in range(cols)]
        for i in range(len(A))
    ]
