"""Exact symmetrization and approximate-degree tools for AND-OR trees."""

from .poly import LaurentPoly, MultiPoly, multilinearize, substitute_affine, fix_variable, \
    symmetrize_average
from .adeg import ApproxSpec, BoolFn, approx_degree, lp_feasible, symmetric_reduce_lp
from .pipeline import BlockProductPoly, RegionSpec, RobustRegionSpec, ShiftParams, thm31_reduce, \
    thm32_symmetrize, verify_nor_approx, verify_region_conditions, weaker_conditions_check

__all__ = [
    "LaurentPoly", "MultiPoly", "multilinearize", "substitute_affine", "fix_variable",
    "symmetrize_average", "ApproxSpec", "BoolFn", "approx_degree", "lp_feasible",
    "symmetric_reduce_lp", "BlockProductPoly", "RegionSpec", "RobustRegionSpec", "ShiftParams",
    "thm31_reduce", "thm32_symmetrize", "verify_nor_approx", "verify_region_conditions",
    "weaker_conditions_check",
]
