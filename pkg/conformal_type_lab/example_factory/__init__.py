"""
The parabolic example: a surface with every vertex of total angle 4π whose triangles have
area at most ε, built stage by stage with exact growth bookkeeping.
"""

from conformal_type_lab.example_factory.audits import (
    EulerAudit, RadiusAudit, RiemannHurwitzAudit, combinatorial_euler_audit,
    module_lower_bound, radius_growth_audit, riemann_hurwitz_audit,)
from conformal_type_lab.example_factory.counts import SymbolicCount
from conformal_type_lab.example_factory.export import (
    area_certificates, export_tiling, fan_angles, thin_angles,)
from conformal_type_lab.example_factory.log_length import LogLength
from conformal_type_lab.example_factory.record import GrowthBuilder, GrowthRecord, Stage, build

__all__ = [
    'EulerAudit',
    'GrowthBuilder',
    'GrowthRecord',
    'LogLength',
    'RadiusAudit',
    'RiemannHurwitzAudit',
    'Stage',
    'SymbolicCount',
    'area_certificates',
    'build',
    'combinatorial_euler_audit',
    'export_tiling',
    'fan_angles',
    'module_lower_bound',
    'radius_growth_audit',
    'riemann_hurwitz_audit',
    'thin_angles',
]
