"""Exact scalars, homogeneous polynomials, parsing and polynomial calculus."""

from .field import DEFAULT_PRIME, QQ, Field
from .parser import parse_poly
from .poly import (
    Poly,
    PolyRing,
    apolar_apply,
    gradient,
    jacobian_det,
    monomials_of_degree,
    multinomial,
)

__all__ = [
    "DEFAULT_PRIME",
    "QQ",
    "Field",
    "Poly",
    "PolyRing",
    "apolar_apply",
    "gradient",
    "jacobian_det",
    "monomials_of_degree",
    "multinomial",
    "parse_poly",
]
