"""Global polar invariants and equisingularity at infinity of polynomial families."""

from .family import Family, FamilySpec, parse_family
from .groebner import (
    Ideal,
    MonomialOrder,
    NotZeroDimensional,
    buchberger,
    eliminate,
    krull_dimension,
    normal_form,
    quotient_dimension,
    saturate,
    staircase,
)
from .invariants import (
    FiberReport,
    GammaProfile,
    Verdict,
    cw_model,
    euler_characteristic,
    euler_jump,
    gamma_star,
    gamma_star_profile,
    milnor_total,
    verdict,
    verify_hypothesis,
)
from .linalg import QMatrix, eigenvalue_zero_multiplicity, multiplication_matrix, rank
from .parser import ParseError, parse_polynomial
from .poly import Polynomial, VarSet, gcd, squarefree_part

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FamilySpec",
    "FiberReport",
    "GammaProfile",
    "Ideal",
    "MonomialOrder",
    "NotZeroDimensional",
    "ParseError",
    "Polynomial",
    "QMatrix",
    "VarSet",
    "Verdict",
    "buchberger",
    "cw_model",
    "eigenvalue_zero_multiplicity",
    "eliminate",
    "euler_characteristic",
    "euler_jump",
    "gamma_star",
    "gamma_star_profile",
    "gcd",
    "krull_dimension",
    "milnor_total",
    "multiplication_matrix",
    "normal_form",
    "parse_family",
    "parse_polynomial",
    "quotient_dimension",
    "rank",
    "saturate",
    "squarefree_part",
    "staircase",
    "verdict",
    "verify_hypothesis",
]
