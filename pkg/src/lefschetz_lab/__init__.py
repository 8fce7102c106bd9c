"""Exact certification of Lefschetz and Veronese conditions for Artinian complete intersections."""

from .assocform import AssociatedForm, apolar_annihilator_dims, associated_form, milnor_system
from .gradedalg import (
    GradedQuotient,
    MultiDegree,
    SystemInput,
    certify_complete_intersection,
    gorenstein_pairing_check,
    hilbert_function,
    ideal_degree_piece,
    multiplication_matrix,
    normal_form,
    socle_functional,
)
from .lefschetz import Verdict, slp1_kernel, slp_at_degree, slp_witness_search
from .polycore import Field, Poly, PolyRing, apolar_apply, gradient, jacobian_det, monomials_of_degree, parse_poly
from .projgeom import (
    condition_smooth_assocform,
    condition_veronese_empty,
    is_artinian_system,
    thmA3_consistency,
    veronese_coordinate_forms,
    veronese_power,
)

__version__ = "0.1.0"

__all__ = [
    "AssociatedForm",
    "Field",
    "GradedQuotient",
    "MultiDegree",
    "Poly",
    "PolyRing",
    "SystemInput",
    "Verdict",
    "apolar_annihilator_dims",
    "apolar_apply",
    "associated_form",
    "certify_complete_intersection",
    "condition_smooth_assocform",
    "condition_veronese_empty",
    "gorenstein_pairing_check",
    "gradient",
    "hilbert_function",
    "ideal_degree_piece",
    "is_artinian_system",
    "jacobian_det",
    "milnor_system",
    "monomials_of_degree",
    "multiplication_matrix",
    "normal_form",
    "parse_poly",
    "slp1_kernel",
    "slp_at_degree",
    "slp_witness_search",
    "socle_functional",
    "thmA3_consistency",
    "veronese_coordinate_forms",
    "veronese_power",
]
