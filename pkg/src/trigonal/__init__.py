"""Exact divisor-class arithmetic on trigonal (3,s) curves.

Divisors of degree g and g+1 are carried as (H, I) and (F, G): a monic
x-polynomial plus a function linear in y.  ``reduce_divisor`` brings any
degree g+p divisor down to its reduced (H, I); ``trigonal.oracle`` checks the
result by independent Riemann-Roch linear algebra.
"""

from .curve import Curve, Monomial, Point, gap_sequence, genus, monomial_basis, new_curve
from .divisor import FRep, HRep, PointDivisor, classify, points_from_rep, rep_from_points_g, rep_from_points_g1
from .errors import (DegenerateClass, FieldMismatch, KernelDimensionError, SpecialDivisor, TrigonalError)
from .field import QQ, FieldElement, PrimeField, RationalField
from .linfun import YLinFun, build_function, z_polynomial
from .oracle import EquivalenceVerdict, check_reduction, exhaustive_class_census, is_principal
from .poly import Poly
from .reduction import (ReductionTrace, add_divisors, complement_g1, extend_with_point, invert, invert_g,
                        minimal_function, reduce_divisor)

__version__ = "0.1.0"

__all__ = [
    "Curve", "Monomial", "Point", "gap_sequence", "genus", "monomial_basis", "new_curve",
    "FRep", "HRep", "PointDivisor", "classify", "points_from_rep", "rep_from_points_g", "rep_from_points_g1",
    "DegenerateClass", "FieldMismatch", "KernelDimensionError", "SpecialDivisor", "TrigonalError",
    "QQ", "FieldElement", "PrimeField", "RationalField",
    "YLinFun", "build_function", "z_polynomial",
    "EquivalenceVerdict", "check_reduction", "exhaustive_class_census", "is_principal",
    "Poly",
    "ReductionTrace", "add_divisors", "complement_g1", "extend_with_point", "invert", "invert_g",
    "minimal_function", "reduce_divisor",
]
