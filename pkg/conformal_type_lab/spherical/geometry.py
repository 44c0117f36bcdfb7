"""
Model triangles of the plane (k = 0) and of the unit sphere (k = 1).

Spherical triangles are handled as unit vectors in R³ with numpy; any k > 0 is normalized
to the unit sphere before it reaches this module.
"""

import dataclasses
import math
from typing import Sequence, Tuple

import numpy as np

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, PreconditionFailed

NORTH_POLE = np.array([0.0, 0.0, 1.0])


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def _spherical_corner(at: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Angle at ``at`` between the great-circle arcs towards ``u`` and ``v``."""
    tangent_u = u - np.dot(at, u) * at
    tangent_v = v - np.dot(at, v) * at
    cosine = np.dot(tangent_u, tangent_v) / (
        np.linalg.norm(tangent_u) * np.linalg.norm(tangent_v))
    return float(np.arccos(np.clip(cosine, -1.0, 1.0)))


def _planar_corner(at: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    du, dv = u - at, v - at
    cosine = np.dot(du, dv) / (np.linalg.norm(du) * np.linalg.norm(dv))
    return float(np.arccos(np.clip(cosine, -1.0, 1.0)))


def _arc(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.arctan2(np.linalg.norm(np.cross(u, v)), np.dot(u, v)))


def solid_angle(p1: Sequence[float], p2: Sequence[float], p3: Sequence[float]) -> float:
    """Area of the spherical triangle with unit-vector vertices, from the triple product.

    tan(Ω/2) = |p1 · (p2 × p3)| / (1 + p1·p2 + p2·p3 + p3·p1)
    """
    a, b, c = (np.asarray(p, dtype=float) for p in (p1, p2, p3))
    numerator = abs(float(np.dot(a, np.cross(b, c))))
    denominator = 1.0 + float(np.dot(a, b) + np.dot(b, c) + np.dot(c, a))
    return 2.0 * math.atan2(numerator, denominator)


@dataclasses.dataclass(frozen=True)
class ModelTriangle:
    """A triangle of S(k), k in {0, 1}.

    Side ``a`` is opposite the angle ``alpha`` and so on. ``vertices`` keeps the points the
    triangle was built from (unit vectors for k = 1, plane points for k = 0).
    """

    k: int
    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    area: float
    vertices: Tuple[Tuple[float, ...], ...] = dataclasses.field(default=(), compare=False)

    @classmethod
    def from_unit_vectors(cls, p1: Sequence[float], p2: Sequence[float],
                          p3: Sequence[float]) -> 'ModelTriangle':
        x, y, z = (_unit(np.asarray(p, dtype=float)) for p in (p1, p2, p3))
        return cls(
            k=1,
            a=_arc(y, z), b=_arc(z, x), c=_arc(x, y),
            alpha=_spherical_corner(x, y, z),
            beta=_spherical_corner(y, z, x),
            gamma=_spherical_corner(z, x, y),
            area=solid_angle(x, y, z),
            vertices=tuple(tuple(float(c) for c in p) for p in (x, y, z)),
        )

    @classmethod
    def from_planar_points(cls, p1: Sequence[float], p2: Sequence[float],
                           p3: Sequence[float]) -> 'ModelTriangle':
        x, y, z = (np.asarray(p, dtype=float) for p in (p1, p2, p3))
        cross = (y - x)[0] * (z - x)[1] - (y - x)[1] * (z - x)[0]
        return cls(
            k=0,
            a=float(np.linalg.norm(z - y)),
            b=float(np.linalg.norm(x - z)),
            c=float(np.linalg.norm(y - x)),
            alpha=_planar_corner(x, y, z),
            beta=_planar_corner(y, z, x),
            gamma=_planar_corner(z, x, y),
            area=abs(float(cross)) / 2,
            vertices=tuple(tuple(float(c) for c in p) for p in (x, y, z)),
        )

    @classmethod
    def from_sides(cls, a: float, b: float, c: float, k: float) -> 'ModelTriangle':
        """The model triangle with the given sides on S(k); k > 0 is scaled to k = 1.

        Raises:
            DomainError: If the sides violate the triangle inequality (or, for k > 0, the
                perimeter reaches 2π).
        """
        if k > 0:
            scale = math.sqrt(k)
            a, b, c = a * scale, b * scale, c * scale
        tolerance = config.tolerance
        if min(a, b, c) <= 0 or a > b + c + tolerance or b > a + c + tolerance \
                or c > a + b + tolerance:
            raise DomainError("sides", (a, b, c), "side lengths of a triangle")
        if k > 0 and a + b + c >= 2 * math.pi:
            raise DomainError("sides", (a, b, c), "spherical perimeters below 2 pi")

        # Vertex x at the origin (or the pole), y along the first axis at distance c, and
        # z at distance b from x whose direction makes the corner angle alpha.
        if k > 0:
            cos_alpha = (math.cos(a) - math.cos(b) * math.cos(c)) / (math.sin(b) * math.sin(c))
            alpha = math.acos(max(-1.0, min(1.0, cos_alpha)))
            x = NORTH_POLE
            y = np.array([math.sin(c), 0.0, math.cos(c)])
            z = np.array([
                math.sin(b) * math.cos(alpha), math.sin(b) * math.sin(alpha), math.cos(b)])
            return cls.from_unit_vectors(x, y, z)
        cos_alpha = (b * b + c * c - a * a) / (2 * b * c)
        alpha = math.acos(max(-1.0, min(1.0, cos_alpha)))
        return cls.from_planar_points(
            (0.0, 0.0), (c, 0.0), (b * math.cos(alpha), b * math.sin(alpha)))

    @property
    def sides(self) -> Tuple[float, float, float]:
        return self.a, self.b, self.c

    @property
    def angles(self) -> Tuple[float, float, float]:
        return self.alpha, self.beta, self.gamma

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def girard_area(self) -> float:
        """α + β + γ − π; the area for k = 1."""
        return self.alpha + self.beta + self.gamma - math.pi

    def law_of_sines_residual(self) -> float:
        """Largest deviation between the three sine ratios."""
        if self.k == 1:
            ratios = [math.sin(side) / math.sin(angle)
                      for side, angle in zip(self.sides, self.angles)]
        else:
            ratios = [side / math.sin(angle) for side, angle in zip(self.sides, self.angles)]
        return max(ratios) - min(ratios)

    def circumradius(self) -> float:
        """Radius of the circumscribed circle (spherical radius for k = 1)."""
        if self.k == 0:
            return self.a * self.b * self.c / (4 * self.area)
        x, y, z = (np.asarray(v) for v in self.vertices)
        normal = _unit(np.cross(y - x, z - x))
        cosine = float(np.dot(normal, x))
        if cosine < 0:
            cosine = -cosine
        return float(np.arccos(np.clip(cosine, -1.0, 1.0)))


def length_constant(eps: float, k: float) -> float:
    """C(ε) bounding the two longer sides of a triangle by its side opposite a corner >= ε.

    1/sin ε in the plane; π / (sin(ε/2) · sin ε) on the sphere after normalizing k to 1.

    Raises:
        DomainError: If ε is outside (0, π).
    """
    if not 0 < eps < math.pi:
        raise DomainError("eps", eps, "(0, pi)")
    if k > 0:
        return math.pi / (math.sin(eps / 2) * math.sin(eps))
    return 1 / math.sin(eps)


def max_side_bound(tri: ModelTriangle, eps: float) -> Tuple[float, bool]:
    """(C(ε)·c, max(a, b) <= C(ε)·c) for the side c opposite the angle γ.

    Raises:
        PreconditionFailed: If γ < ε, or for k = 1 if the perimeter exceeds 2π − ε.
    """
    tolerance = config.tolerance
    if tri.gamma < eps - tolerance:
        raise PreconditionFailed(f"gamma = {tri.gamma} >= eps = {eps}")
    if tri.k == 1 and tri.perimeter > 2 * math.pi - eps + tolerance:
        raise PreconditionFailed(f"perimeter = {tri.perimeter} <= 2 pi - eps")
    bound = length_constant(eps, tri.k) * tri.c
    return bound, max(tri.a, tri.b) <= bound + tolerance


def isoperimetric_quadratic(k: float, L: float, A: float) -> float:
    """L² − 4πA + kA², non-negative for simply connected domains of a surface in S(k)."""
    return L * L - 4 * math.pi * A + k * A * A


@dataclasses.dataclass(frozen=True)
class IsoperimetricCheck:
    quadratic: float  # L² − 4πA + kA²
    area_capped: bool  # A <= 2π/k, always true for k <= 0
    small_domain: bool  # 2πA <= L²


def small_domain_isoperimetric(k: float, L: float, A: float) -> IsoperimetricCheck:
    """Evaluate the quadratic together with the small-domain consequence 2πA <= L².

    For k > 0 the consequence needs the area cap A <= 2π/k, since then
    2πA <= (4π − kA)A <= L².
    """
    tolerance = config.tolerance
    quadratic = isoperimetric_quadratic(k, L, A)
    area_capped = k <= 0 or A <= 2 * math.pi / k + tolerance
    return IsoperimetricCheck(
        quadratic=quadratic,
        area_capped=area_capped,
        small_domain=2 * math.pi * A <= L * L + tolerance,
    )
