"""
The half-sheet curvature identity.

A half-sheet over the upper hemisphere is tiled by the q triangles joining the pole to
consecutive points ν_1..ν_q of the equator: pole angle 2π/q, base angles π/2, area 2π/q
each. With T(pole) = 2π and T(ν_j) = 2πm_j the angular curvature of the fan sums to πE_p,
where E_p = Σ 1/m_j − q + 2 is the excess of the vertex of the line complex.

Exact values are measured in units of π.
"""

import math
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from conformal_type_lab.errors import DomainError
from conformal_type_lab.line_complex.complex import HalfPerimeter
from conformal_type_lab.line_complex.excess import excess_from_half_perimeters
from conformal_type_lab.tiling.curvature import curvature_from_angles
from conformal_type_lab.tiling.tiling import Tiling, Triangle

# Angles in units of π: a full turn is 2
FULL_TURN = Fraction(2)


class HalfSheetIdentity(NamedTuple):
    sum_K: Fraction  # Σ K(Δ) over the fan, in units of π
    pi_Ep: Fraction  # E_p, so that πE_p is the same quantity in radians
    residual: Fraction  # sum_K − pi_Ep


def _check(q: int, m: Sequence[HalfPerimeter]) -> None:
    if q < 3:
        raise DomainError("q", q, "integers >= 3")
    if len(m) != q:
        raise DomainError("m", tuple(m), f"sequences of {q} half-perimeters")
    for value in m:
        if not math.isinf(value) and (value < 1 or int(value) != value):
            raise DomainError("m", tuple(m), "positive integers or inf")


def _total(m_j: HalfPerimeter):
    """T(ν_j) in units of π; infinite for a logarithmic face."""
    return math.inf if math.isinf(m_j) else FULL_TURN * int(m_j)


def fan_curvatures(q: int, m: Sequence[HalfPerimeter]) -> List[Fraction]:
    """K(Δ_j) in units of π for the triangles (pole, ν_j, ν_{j+1})."""
    _check(q, m)
    pole_angle = Fraction(2, q)
    base_angle = Fraction(1, 2)
    curvatures = []
    for j in range(q):
        angles = (pole_angle, base_angle, base_angle)
        totals = (FULL_TURN, _total(m[j]), _total(m[(j + 1) % q]))
        curvatures.append(curvature_from_angles(angles, totals, FULL_TURN))
    return curvatures


def half_sheet_curvature_identity(q: int, m: Sequence[HalfPerimeter]) -> HalfSheetIdentity:
    """Σ K(Δ) over the hemisphere fan against E_p, exactly.

    Raises:
        DomainError: If q < 3 or ``m`` is not a sequence of q half-perimeters.
    """
    sum_K = sum(fan_curvatures(q, m), Fraction(0))
    excess = excess_from_half_perimeters(q, m)
    return HalfSheetIdentity(sum_K=sum_K, pi_Ep=excess, residual=sum_K - excess)


def half_sheet_tiling(q: int, m: Sequence[HalfPerimeter]) -> Tiling:
    """The hemisphere fan as a tiling in radians, with ω(Δ°) equal to the area 2π/q."""
    _check(q, m)
    vertices = {"pole": 2 * math.pi}
    for j, m_j in enumerate(m, start=1):
        vertices[f"nu{j}"] = math.inf if math.isinf(m_j) else 2 * math.pi * int(m_j)
    triangles = [
        Triangle(
            id=f"H{j + 1}",
            vertices=("pole", f"nu{j + 1}", f"nu{(j + 1) % q + 1}"),
            angles=(2 * math.pi / q, math.pi / 2, math.pi / 2),
            lengths=(math.pi / 2, 2 * math.pi / q, math.pi / 2),
            k=1.0,
            omega=2 * math.pi / q,
        )
        for j in range(q)
    ]
    return Tiling(vertices, triangles, {"H": [t.id for t in triangles]})
