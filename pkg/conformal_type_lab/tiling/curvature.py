"""
Total angle, angular curvature and model-triangle areas.

The angular curvature of a triangle with corner angles θ_i at vertices of total angle T_i is
K(Δ) = 2π Σ θ_i / T_i − π, with θ / ∞ = 0. The helpers accept any number type, so the same
formula evaluates exactly on rationals measured in units of π.
"""

import math
from numbers import Real
from typing import Sequence, Tuple

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError
from conformal_type_lab.tiling.tiling import Tiling


def _ratio(angle: Real, total: Real) -> Real:
    if isinstance(total, float) and math.isinf(total):
        return 0 * angle
    return angle / total


def curvature_from_angles(angles: Sequence[Real], totals: Sequence[Real],
                          full_turn: Real = 2 * math.pi) -> Real:
    """full_turn · Σ θ_i / T_i − full_turn / 2.

    ``full_turn`` is 2π for radians and 2 for angles measured in units of π.
    """
    weighted = sum(_ratio(angle, total) for angle, total in zip(angles, totals))
    return full_turn * weighted - full_turn / 2


def vertex_curvature_share(angles: Sequence[Real], totals: Sequence[Real],
                           full_turn: Real = 2 * math.pi) -> Real:
    """Σ (2π − T_i)/T_i · θ_i: the vertex curvature distributed to the triangle.

    A vertex at infinity contributes −θ_i.
    """
    share = 0 * full_turn
    for angle, total in zip(angles, totals):
        if isinstance(total, float) and math.isinf(total):
            share -= angle
        else:
            share += (full_turn - total) / total * angle
    return share


def total_angle(tiling: Tiling, vertex_id: str) -> float:
    """T(v) as stored for the vertex; ``math.inf`` for a vertex at infinity.

    Raises:
        UnknownVertex: If the vertex is not part of the tiling.
    """
    return tiling.stored_total_angle(vertex_id)


def incident_angle_sum(tiling: Tiling, vertex_id: str) -> float:
    """Σ_Δ θ(v, Δ) over the tiles of this tiling."""
    return sum(t.angle_at(vertex_id) for t in tiling.incident(vertex_id))


def is_interior_vertex(tiling: Tiling, vertex_id: str) -> bool:
    """Every side at the vertex is shared by two tiles."""
    sides = [
        side for t in tiling.incident(vertex_id) for side in t.sides if vertex_id in side
    ]
    return bool(sides) and all(len(tiling.triangles_on_side(side)) == 2 for side in sides)


def angular_curvature(tiling: Tiling, triangle_id: str) -> float:
    """K(Δ) = 2π Σ θ(v_i, Δ)/T(v_i) − π.

    Raises:
        UnknownTriangle: If the triangle is not part of the tiling.
    """
    triangle = tiling.triangle(triangle_id)
    totals = [tiling.stored_total_angle(v) for v in triangle.vertices]
    return curvature_from_angles(triangle.angles, totals)


def decomposed_curvature(tiling: Tiling, triangle_id: str) -> float:
    """Vertex share plus ω(Δ°) plus the left turns of the sides.

    Equals :func:`angular_curvature` when ω(Δ°) satisfies Gauss–Bonnet for the tile.
    If ω is not stored it is taken from Gauss–Bonnet.
    """
    triangle = tiling.triangle(triangle_id)
    totals = [tiling.stored_total_angle(v) for v in triangle.vertices]
    omega = triangle.omega
    if omega is None:
        omega = gauss_bonnet_omega(triangle.angles, triangle.turns)
    return vertex_curvature_share(triangle.angles, totals) + omega + sum(triangle.turns)


def gauss_bonnet_omega(angles: Sequence[float],
                       turns: Sequence[float] = (0.0, 0.0, 0.0)) -> float:
    """ω(Δ°) = Σ θ_i − π − Σ τ(L_i)."""
    return sum(angles) - math.pi - sum(turns)


def model_area(lengths: Sequence[float], k: float) -> float:
    """Area of the model triangle with the given sides in the plane (k = 0) or on the sphere
    of curvature k > 0.

    Raises:
        DomainError: For k < 0 or side lengths violating the triangle inequality.
    """
    a, b, c = (float(length) for length in lengths)
    if k < 0:
        raise DomainError("k", k, "k >= 0")
    tolerance = config.tolerance
    if min(a, b, c) < 0 or a > b + c + tolerance or b > a + c + tolerance \
            or c > a + b + tolerance:
        raise DomainError("lengths", (a, b, c), "side lengths of a triangle")
    if k == 0:
        s = (a + b + c) / 2
        return math.sqrt(max(s * (s - a) * (s - b) * (s - c), 0.0))

    scale = math.sqrt(k)
    a, b, c = a * scale, b * scale, c * scale
    s = (a + b + c) / 2
    # L'Huilier: tan(E/4)^2 = tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2)
    product = (
        math.tan(s / 2) * math.tan((s - a) / 2) * math.tan((s - b) / 2) * math.tan((s - c) / 2)
    )
    spherical_excess = 4 * math.atan(math.sqrt(max(product, 0.0)))
    return spherical_excess / k


def gauss_bonnet_residual(angles: Sequence[float], lengths: Sequence[float],
                          k: float) -> Tuple[float, float]:
    """(Σθ − π, k · area) for a constant-curvature triangle with geodesic sides."""
    return sum(angles) - math.pi, k * model_area(lengths, k)
