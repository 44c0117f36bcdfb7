"""
Windowed export of the growth record as a tiling.

The full triangulation has t_{n+1} boundary vertices, far too many to list. The export keeps
a window of consecutive boundary vertices per circle, with the thin triangles between them
and the first fan triangles of each. Corner angles come from the planar construction and
are stored as floats, so angles that underflow are clamped to the smallest positive float.
Side lengths are stored up to scale (longest side 1) since the radii overflow; the exact
area bounds are reported separately by :func:`area_certificates`.

Vertices over the circle of radius R_i are named ``v1``, ``v2``, ``v3`` for i = 1 and
``<parent>.<k>`` for the k-th fan vertex of ``parent`` otherwise.
"""

import math
import sys
from typing import Any, Dict, List, Optional, Tuple

from conformal_type_lab.config import config
from conformal_type_lab.errors import StageMissing
from conformal_type_lab.example_factory.record import GrowthRecord, Stage
from conformal_type_lab.tiling.tiling import Tiling, Triangle

SMALLEST_ANGLE = sys.float_info.min * sys.float_info.epsilon
BRANCH_TOTAL = 4 * math.pi
REGULAR_TOTAL = 2 * math.pi


def _clamped_exp(log_value: float) -> float:
    if log_value == -math.inf or log_value < -745:
        return SMALLEST_ANGLE
    return max(SMALLEST_ANGLE, math.exp(log_value))


def _shape_lengths(angles: Tuple[float, float, float]) -> Tuple[float, float, float]:
    """|v1v2|, |v2v3|, |v3v1| by the law of sines, longest side 1."""
    a1, a2, a3 = angles
    sines = (math.sin(a3), math.sin(a1), math.sin(a2))
    longest = max(sines)
    return tuple(max(s / longest, SMALLEST_ANGLE) for s in sines)


def thin_angles(stage: Stage, eps: float) -> Tuple[float, float, float]:
    """Angles at (v_j, v_{j+1}, w_{j+1}) of a thin triangle of the stage.

    The angle at v_{j+1} is ε/(2R_n·R_{n+1}), which keeps the area at most ε; the angle at
    w_{j+1} is then ε/R_{n+1}².
    """
    log_inner = stage.log_radius.approx()
    log_outer = stage.next_log_radius.approx()
    theta_side = _clamped_exp(math.log(eps) - math.log(2) - log_inner - log_outer)
    theta_outer = _clamped_exp(math.log(eps) - 2 * log_outer)
    return math.pi - theta_side - theta_outer, theta_side, theta_outer


def fan_angles(stage: Stage) -> Tuple[float, float, float]:
    """Angles at (v_j, w^k, w^{k+1}) of a fan triangle: apex 2π·s_n/t_{n+1}."""
    sheets_log2 = stage.sheets.approx_log2()
    t_log2 = stage.t.approx_log2()
    ratio_log2 = sheets_log2 - t_log2 if math.isfinite(sheets_log2 + t_log2) else 0.0
    apex_log2 = math.log2(2 * math.pi) + ratio_log2 - stage.exponent.approx_float()
    apex = SMALLEST_ANGLE if apex_log2 < -1074 else max(SMALLEST_ANGLE, 2.0 ** apex_log2)
    apex = min(apex, math.pi / 3)
    base = (math.pi - apex) / 2
    return apex, base, base


def _triangle(triangle_id: str, vertices: Tuple[str, str, str],
              angles: Tuple[float, float, float]) -> Triangle:
    return Triangle(
        id=triangle_id,
        vertices=vertices,
        angles=angles,
        lengths=_shape_lengths(angles),
        k=0.0,
        omega=0.0,
    )


def export_tiling(record: GrowthRecord, n: int, window: Optional[int] = None,
                  limit_surface: bool = True) -> Tiling:
    """Representative triangles of the disk built through stage n, one cluster each.

    Args:
        record (GrowthRecord): The growth record.
        n (int): Last stage included, 0..built.
        window (Optional[int]): Boundary vertices kept per circle and fan triangles kept per
            vertex; the ``record.window`` setting by default.
        limit_surface (bool): Give every vertex total angle 4π, as on the limit surface
            where every vertex is a branch point. Otherwise vertices on the outermost
            circle have 2π.

    Raises:
        StageMissing: If n is outside 0..built.
    """
    if not 0 <= n <= record.built:
        raise StageMissing(n, record.built)
    if window is None:
        window = config.get_record_settings()["window"]
    window = max(1, int(window))

    front = ["v1", "v2", "v3"][:min(window, 3)]
    closed = len(front) == 3
    triangles = [_triangle("D0", ("v1", "v2", "v3"), (math.pi / 3,) * 3)]
    totals: Dict[str, float] = {v: BRANCH_TOTAL for v in ("v1", "v2", "v3")}

    for i in range(1, n + 1):
        stage = record.stage(i)
        thin = thin_angles(stage, record.eps)
        fan = fan_angles(stage)
        fan_count = window
        if stage.subdivision.is_constant:
            fan_count = min(window, int(stage.subdivision))
        pairs = list(zip(front, front[1:]))
        if closed and len(front) > 1:
            pairs.append((front[-1], front[0]))
        for j, (v_j, v_next) in enumerate(pairs, start=1):
            triangles.append(_triangle(f"D{i}_{j}", (v_j, v_next, f"{v_next}.0"), thin))
        for j, v_j in enumerate(front, start=1):
            for k in range(fan_count):
                w_k, w_next = f"{v_j}.{k}", f"{v_j}.{k + 1}"
                triangles.append(_triangle(f"F{i}_{j}_{k}", (v_j, w_k, w_next), fan))
        for triangle in triangles:
            for v in triangle.vertices:
                totals.setdefault(v, BRANCH_TOTAL)
        front = [f"{front[0]}.{k}" for k in range(min(window, fan_count + 1))]
        closed = False

    if not limit_surface:
        outermost = {v for v in totals if v.count(".") == n}
        for v in outermost:
            totals[v] = REGULAR_TOTAL
    return Tiling(totals, triangles).singleton_clusters()


def area_certificates(record: GrowthRecord, n: int) -> List[Dict[str, Any]]:
    """Per triangle class, the margin ln ε − (log-area bound), which is non-negative.

    Thin triangles meet the bound with equality by the choice of their angles. Fan
    triangles under the dominating exponent rule are certified symbolically and carry no
    float margin.

    Raises:
        StageMissing: If n is outside 0..built.
    """
    if not 0 <= n <= record.built:
        raise StageMissing(n, record.built)
    certificates = [{
        "stage": 0,
        "class": "base",
        "rule": "inscribed",
        "margin": math.log(record.eps) - math.log(record.base_area),
    }]
    for i in range(1, n + 1):
        stage = record.stage(i)
        certificates.append({"stage": i, "class": "thin", "rule": "angle", "margin": 0.0})
        certificates.append({
            "stage": i,
            "class": "fan",
            "rule": stage.exponent_rule,
            "margin": stage.area_margin,
        })
    return certificates
