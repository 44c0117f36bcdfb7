"""
Triangle tilings: curvature, hyperbolicity condition checkers, combinatorics, the constant
ledger and generators.
"""

from conformal_type_lab.tiling.combinatorics import (
    CombinatorialReport, EulerIdentity, boundary_sides, boundary_walk_length,
    comb_isoperimetric_check, euler_boundary_identity,)
from conformal_type_lab.tiling.curvature import (
    angular_curvature, curvature_from_angles, decomposed_curvature, gauss_bonnet_omega,
    gauss_bonnet_residual, incident_angle_sum, is_interior_vertex, model_area, total_angle,
    vertex_curvature_share,)
from conformal_type_lab.tiling.generators import (
    TrianglePatchBuilder, equilateral_side, random_simply_connected_union,
    regular_triangle_patch,)
from conformal_type_lab.tiling.half_sheet import (
    HalfSheetIdentity, fan_curvatures, half_sheet_curvature_identity, half_sheet_tiling,)
from conformal_type_lab.tiling.ledger import ConstantLedger, constant_ledger
from conformal_type_lab.tiling.theorems import (
    TilingChecker, check_corollary_conditions, check_final_tiling_theorem, check_theorem_T,)
from conformal_type_lab.tiling.tiling import Tiling, Triangle

__all__ = [
    'CombinatorialReport',
    'ConstantLedger',
    'EulerIdentity',
    'HalfSheetIdentity',
    'TilingChecker',
    'Tiling',
    'TrianglePatchBuilder',
    'Triangle',
    'angular_curvature',
    'boundary_sides',
    'boundary_walk_length',
    'check_corollary_conditions',
    'check_final_tiling_theorem',
    'check_theorem_T',
    'comb_isoperimetric_check',
    'constant_ledger',
    'curvature_from_angles',
    'decomposed_curvature',
    'equilateral_side',
    'euler_boundary_identity',
    'fan_curvatures',
    'gauss_bonnet_omega',
    'gauss_bonnet_residual',
    'half_sheet_curvature_identity',
    'half_sheet_tiling',
    'incident_angle_sum',
    'is_interior_vertex',
    'model_area',
    'random_simply_connected_union',
    'regular_triangle_patch',
    'total_angle',
    'vertex_curvature_share',
]
