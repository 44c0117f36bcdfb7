"""
Exact audits of a growth record.
"""

from fractions import Fraction
from typing import NamedTuple

from conformal_type_lab.errors import PreconditionFailed, StageMissing
from conformal_type_lab.example_factory.counts import SymbolicCount
from conformal_type_lab.example_factory.log_length import LogLength
from conformal_type_lab.example_factory.record import GrowthRecord

DISK_EULER_CHAR = 1


class RiemannHurwitzAudit(NamedTuple):
    sheets: SymbolicCount
    branch_count: SymbolicCount
    euler_char: SymbolicCount


class EulerAudit(NamedTuple):
    vertices: SymbolicCount
    edges: SymbolicCount
    faces: SymbolicCount
    euler_char: SymbolicCount


class RadiusAudit(NamedTuple):
    holds: bool  # log R_{n+1} − log R_n >= 2πn·s_n
    tight: bool  # equality, as with zero radius slack


def module_lower_bound(record: GrowthRecord, n: int) -> Fraction:
    """Lower bound (1/2π·s_n)·log(R_{n+1}/R_n) on the module of the n-th annulus.

    The value is n(1 + radius_slack) exactly.

    Raises:
        StageMissing: If stage n (which fixes R_{n+1}) is not built.
        PreconditionFailed: If the bound is not rational or falls below n.
    """
    ratio = record.stage(n).module_ratio()
    if ratio is None or ratio < n:
        raise PreconditionFailed(f"module of annulus {n} is at least {n}")
    return ratio


def radius_growth_audit(record: GrowthRecord, n: int) -> RadiusAudit:
    stage = record.stage(n)
    excess = stage.next_log_radius - stage.log_radius - LogLength.of(stage.sheets * (2 * n))
    sign = excess.sign()
    return RadiusAudit(holds=sign >= 0, tight=sign == 0)


def riemann_hurwitz_audit(record: GrowthRecord, n: int) -> RiemannHurwitzAudit:
    """Sheets, branch points and Euler characteristic of the surface over the disk of
    radius R_{n+1}.

    The sheet count is the stored s_n of stage n (1 before the first stage). Every vertex of
    the first n circles is a simple branch point, so χ = sheets·χ(disk) − branch_count
    with χ(disk) = 1. The surface is a disk exactly when χ = 1.

    Raises:
        StageMissing: If n is outside 0..built.
    """
    if not 0 <= n <= record.built:
        raise StageMissing(n, record.built)
    branch_count = sum(record.vertex_counts(n)[:n], SymbolicCount(0))
    sheets = record.stage(n).sheets if n else SymbolicCount(1)
    euler_char = sheets * DISK_EULER_CHAR - branch_count
    return RiemannHurwitzAudit(sheets=sheets, branch_count=branch_count, euler_char=euler_char)


def combinatorial_euler_audit(record: GrowthRecord, n: int) -> EulerAudit:
    """V − E + F of the triangulated disk built through stage n.

    Vertices are read off the stored sheet count: the first n circles carry
    t_1 + ... + t_n = s_n − 1 vertices and the outer circle t_{n+1}. Edges and faces are
    counted per stage i and boundary vertex v_j: one thin triangle and M_i fan triangles,
    with M_i + 1 fan edges and M_i outer edges.

    Raises:
        StageMissing: If n is outside 0..built.
    """
    outer = record.vertex_counts(n)[-1]
    vertices = record.stage(n).sheets - 1 + outer if n else outer
    edges, faces = SymbolicCount(3), SymbolicCount(1)
    for i in range(1, n + 1):
        stage = record.stage(i)
        fans = stage.t * stage.subdivision
        edges = edges + fans * 2 + stage.t
        faces = faces + fans + stage.t
    return EulerAudit(
        vertices=vertices,
        edges=edges,
        faces=faces,
        euler_char=vertices - edges + faces,
    )
