"""Homogeneous polynomials with exact coefficients.

Monomials are exponent tuples.  Every ordering of monomials in the package
is graded-lex with x1 > x2 > ... > xn, listed from the largest monomial
down, so degree-1 bases read (x1, ..., xn) and ``x1^2`` precedes ``x1*x2``.

A :class:`PolyRing` fixes the variable names, the coefficient field and a
space tag: ``"x"`` for the primal ring S, ``"y"`` for the dual ring R on
which S acts by differentiation, and ``"a"`` for coefficient variables of
a generic linear form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DegreeError, VariableSpaceError
from .field import QQ, Field

Monomial = tuple


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    """All exponent vectors of length ``n`` and total degree ``d``, graded-lex descending."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials_of_degree(n, d))}


def gradedlex_key(m: Monomial):
    """Sort key placing larger monomials first."""
    return (-sum(m), tuple(-e for e in m))


def multinomial(m: Monomial) -> int:
    """Multinomial coefficient (|m|; m_1, ..., m_n)."""
    out = math.factorial(sum(m))
    for e in m:
        out //= math.factorial(e)
    return out


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def unit(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


_DUAL_OF_XYZ = {("x", "y", "z"): ("u", "v", "w")}


@dataclass(frozen=True)
class PolyRing:
    names: tuple
    field: Field = QQ
    space: str = "x"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if self.space not in ("x", "y", "a"):
            raise ValueError(f"unknown variable space {self.space!r}")

    @classmethod
    def standard(cls, n: int, field: Field = QQ, space: str = "x") -> "PolyRing":
        prefix = {"x": "x", "y": "y", "a": "a"}[space]
        return cls(tuple(f"{prefix}{i + 1}" for i in range(n)), field, space)

    @property
    def n(self) -> int:
        return len(self.names)

    def dual(self) -> "PolyRing":
        """The ring R of dual variables on which this ring acts."""
        names = _DUAL_OF_XYZ.get(self.names)
        if names is None or set(names) & set(self.names):
            names = tuple(f"y{i + 1}" for i in range(self.n))
            if set(names) & set(self.names):
                names = tuple(f"D{v}" for v in self.names)
        return PolyRing(names, self.field, "y")

    def coefficient_ring(self) -> "PolyRing":
        names = tuple(f"a{i + 1}" for i in range(self.n))
        if set(names) & set(self.names):
            names = tuple(f"a_{v}" for v in self.names)
        return PolyRing(names, self.field, "a")

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.names, field, self.space)

    def monomials(self, d: int) -> tuple:
        return monomials_of_degree(self.n, d)

    def gen(self, i: int) -> "Poly":
        return Poly(self, {unit(self.n, i): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.n))

    def zero(self, degree: int = 0) -> "Poly":
        return Poly(self, {}, degree)

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.n: 1})

    def monomial(self, m: Monomial, coeff=1) -> "Poly":
        return Poly(self, {tuple(m): coeff})

    def linear_form(self, coeffs) -> "Poly":
        coeffs = list(coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return Poly(self, {unit(self.n, i): c for i, c in enumerate(coeffs)}, 1)

    def from_vector(self, d: int, vec) -> "Poly":
        """Polynomial with coefficient vector ``vec`` on :meth:`monomials` ``(d)``."""
        return Poly(self, dict(zip(self.monomials(d), vec)), d)

    def parse(self, text: str) -> "Poly":
        from .parser import parse_poly

        return parse_poly(text, self)


class Poly:
    """Homogeneous polynomial: immutable sparse map from monomials to nonzero scalars."""

    __slots__ = ("ring", "terms", "degree", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, degree: int | None = None):
        field = ring.field
        clean = {}
        for m, c in terms.items():
            c = field(c)
            if c != 0:
                clean[tuple(m)] = c
        degrees = {sum(m) for m in clean}
        if len(degrees) > 1:
            lo, hi = min(degrees), max(degrees)
            raise DegreeError(f"non-homogeneous polynomial: degrees {hi} and {lo}")
        for m in clean:
            if len(m) != ring.n or min(m) < 0:
                raise ValueError(f"bad exponent vector {m} for {ring.n} variables")
        if degrees:
            (actual,) = degrees
            if degree is not None and degree != actual:
                raise DegreeError(f"declared degree {degree} but terms have degree {actual}")
            degree = actual
        elif degree is None:
            degree = 0
        self.ring = ring
        self.terms = clean
        self.degree = degree
        self._hash = None

    # basic protocol

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"Poly({self.to_str()!r}, degree={self.degree}, space={self.ring.space})"

    def __str__(self):
        return self.to_str()

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: gradedlex_key(t[0]))

    def coeff(self, m: Monomial):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def vector(self) -> list:
        """Dense coefficients on the graded-lex basis of the polynomial's degree."""
        return [self.coeff(m) for m in self.ring.monomials(self.degree)]

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            c = field.signed(c)
            neg = c < 0
            mag = -c if neg else c
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if mag != 1 or not factors:
                factors.insert(0, field.format(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    # arithmetic

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise VariableSpaceError(
                f"cannot combine polynomials from {self.ring.space}{self.ring.names} "
                f"and {other.ring.space}{other.ring.names}"
            )

    def _same_degree(self, other: "Poly") -> int:
        if self.terms and other.terms and self.degree != other.degree:
            raise DegreeError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return self.degree if self.terms or not other.terms else other.degree

    def __add__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            return NotImplemented
        self._check_ring(other)
        degree = self._same_degree(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = field(out.get(m, 0) + c)
        return Poly(self.ring, out, degree)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Poly":
        field = self.ring.field
        c = field(c)
        return Poly(self.ring, {m: field(v * c) for m, v in self.terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_ring(other)
            field = self.ring.field
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    out[m] = out.get(m, 0) + c1 * c2
            return Poly(self.ring, {m: field(c) for m, c in out.items()}, self.degree + other.degree)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i: int) -> "Poly":
        """Derivative with respect to the i-th variable (0-based)."""
        field = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                out[mm] = field(c * e)
        return Poly(self.ring, out, max(self.degree - 1, 0))

    def evaluate(self, point):
        field = self.ring.field
        total = field.zero
        for m, c in self.terms.items():
            term = c
            for v, e in zip(point, m):
                if e:
                    term = term * v**e
            total = total + term
        return field(total)

    def to_field(self, field: Field) -> "Poly":
        """Reinterpret rational/integer coefficients over another field."""
        return Poly(self.ring.with_field(field), dict(self.terms), self.degree)


def gradient(f: Poly) -> tuple:
    """Partial derivatives of a primal form."""
    if f.ring.space != "x":
        raise VariableSpaceError("gradient expects a polynomial in the primal x-variables")
    if f.degree < 1:
        raise DegreeError(f"gradient needs degree >= 1, got {f.degree}")
    return tuple(f.partial(i) for i in range(f.ring.n))


def _det(matrix: list, ring: PolyRing, degree: int) -> Poly:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = ring.zero(degree)
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(minor, ring, degree - entry.degree)
        total = total - term if j % 2 else total + term
    return total


def jacobian_det(forms) -> Poly:
    """det(d f_i / d x_j) by cofactor expansion, homogeneous of degree sum(d_j - 1)."""
    forms = tuple(forms)
    if not forms:
        raise ValueError("need at least one form")
    ring = forms[0].ring
    if any(f.ring != ring for f in forms):
        raise VariableSpaceError("all forms must live in the same ring")
    if len(forms) != ring.n:
        raise ValueError(f"need {ring.n} forms for {ring.n} variables, got {len(forms)}")
    expected = sum(f.degree - 1 for f in forms)
    rows = [[f.partial(j) for j in range(ring.n)] for f in forms]
    det = _det(rows, ring, expected)
    if det.terms and det.degree != expected:
        raise DegreeError(f"jacobian has degree {det.degree}, expected {expected}")
    return Poly(ring, det.terms, expected)


def apolar_apply(g: Poly, F: Poly) -> Poly:
    """g o F: act on a dual form by reading each x_i as d/dy_i."""
    if g.ring.space != "x" or F.ring.space != "y":
        raise VariableSpaceError("apolar action needs g in x-variables and F in y-variables")
    if g.ring.n != F.ring.n or g.ring.field != F.ring.field:
        raise VariableSpaceError("g and F must come from dual rings over the same field")
    if g.degree > F.degree:
        raise DegreeError(f"deg g = {g.degree} exceeds deg F = {F.degree}")
    field = F.ring.field
    out = {}
    for a, ca in g.terms.items():
        for b, cb in F.terms.items():
            if all(x <= y for x, y in zip(a, b)):
                weight = 1
                for x, y in zip(a, b):
                    weight *= math.perm(y, x)
                m = tuple(y - x for x, y in zip(a, b))
                out[m] = out.get(m, 0) + ca * cb * weight
    return Poly(F.ring, {m: field(c) for m, c in out.items()}, F.degree - g.degree)


def linear_power_terms(coeffs, m: int):
    """Yield (monomial, coefficient) of (sum c_i x_i)^m by the multinomial theorem."""
    n = len(coeffs)
    for alpha in monomials_of_degree(n, m):
        c = multinomial(alpha)
        for ci, e in zip(coeffs, alpha):
            if e:
                c = c * ci**e
        if c != 0:
            yield alpha, c


def all_monomials_upto(n: int, d: int):
    return itertools.chain.from_iterable(monomials_of_degree(n, k) for k in range(d + 1))
