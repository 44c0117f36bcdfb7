from conformal_type_lab.spherical.corollary import (
    CorollaryBound, corollary_area_and_curvature, corollary_eta, max_inscribed_area,)
from conformal_type_lab.spherical.geometry import (
    IsoperimetricCheck, ModelTriangle, isoperimetric_quadratic, length_constant,
    max_side_bound, small_domain_isoperimetric, solid_angle,)
from conformal_type_lab.spherical.radius import (
    circumradius_equilateral_oracle, equilateral_triangle_at_radius, r_q_eps,)

__all__ = [
    'CorollaryBound',
    'IsoperimetricCheck',
    'ModelTriangle',
    'circumradius_equilateral_oracle',
    'corollary_area_and_curvature',
    'corollary_eta',
    'equilateral_triangle_at_radius',
    'isoperimetric_quadratic',
    'length_constant',
    'max_inscribed_area',
    'max_side_bound',
    'r_q_eps',
    'small_domain_isoperimetric',
    'solid_angle',
]
