"""Stable Grothendieck polynomials: straightening, products, coproducts, Pieri and Schur expansions."""

from .core import GExpansion, IntSeq, Partition, SExpansion, TensorGExpansion, straighten_groth, straighten_schur
from .errors import GrothresError, InvariantViolation
from .pieri import pieri_expand
from .products import comultiply_g, comultiply_via_rectangle, multiply_g
from .schurexp import g_to_schur, hat_lambda
from .symfunc import XPolynomial, g_poly, schur_poly

__all__ = [
    "GExpansion",
    "GrothresError",
    "IntSeq",
    "InvariantViolation",
    "Partition",
    "SExpansion",
    "TensorGExpansion",
    "XPolynomial",
    "comultiply_g",
    "comultiply_via_rectangle",
    "g_poly",
    "g_to_schur",
    "hat_lambda",
    "multiply_g",
    "pieri_expand",
    "schur_poly",
    "straighten_groth",
    "straighten_schur",
]
