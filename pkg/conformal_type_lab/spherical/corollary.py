"""
Area and curvature bounds for spherical triangles of bounded circumradius.

A spherical triangle inscribed in a circle of radius at most R_{q,ε} has area at most
π(q − 1) − η, where π(q − 1) − η is the area of the equilateral triangle inscribed in that
circle. The equilateral triangle is taken as the maximizer; ``max_inscribed_area`` checks
the choice by sampling random inscribed triangles.
"""

import math
from typing import NamedTuple, Optional, Tuple

import numpy as np

from conformal_type_lab.config import config
from conformal_type_lab.errors import PreconditionFailed
from conformal_type_lab.spherical.geometry import ModelTriangle
from conformal_type_lab.spherical.radius import equilateral_triangle_at_radius, r_q_eps
from conformal_type_lab.utils import create_logger

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)

MAXIMIZER_SLACK = 1e-9


class CorollaryBound(NamedTuple):
    area_bound: float  # π(q − 1) − η
    K_bound: float  # −η/q


def _sampled_areas(radius: float, samples: int, rng: np.random.Generator) -> np.ndarray:
    longitudes = rng.uniform(0.0, 2 * math.pi, size=(samples, 3))
    points = np.stack([
        np.sin(radius) * np.cos(longitudes),
        np.sin(radius) * np.sin(longitudes),
        np.full(longitudes.shape, np.cos(radius)),
    ], axis=-1)
    p1, p2, p3 = points[:, 0], points[:, 1], points[:, 2]
    numerator = np.abs(np.einsum("ij,ij->i", p1, np.cross(p2, p3)))
    denominator = 1.0 + (np.einsum("ij,ij->i", p1, p2) + np.einsum("ij,ij->i", p2, p3)
                         + np.einsum("ij,ij->i", p3, p1))
    return 2.0 * np.arctan2(numerator, denominator)


def max_inscribed_area(radius: float, samples: Optional[int] = None,
                       seed: Optional[int] = None) -> Tuple[float, float]:
    """(equilateral area, largest sampled area) for triangles inscribed in the circle of
    spherical radius ``radius``.

    Args:
        radius (float): Circumradius in (0, π/2].
        samples (Optional[int]): Number of random triangles; ``inscribed_samples`` from the
            configuration by default.
        seed (Optional[int]): Generator seed; ``config.seed`` by default.
    """
    if samples is None:
        samples = config.get_spherical_settings()["inscribed_samples"]
    rng = np.random.default_rng(config.seed if seed is None else seed)
    equilateral = equilateral_triangle_at_radius(radius).area
    sampled = float(_sampled_areas(radius, samples, rng).max()) if samples > 0 else 0.0
    return equilateral, sampled


def corollary_eta(q: float, eps: float) -> float:
    """η = π(q − 1) − area of the equilateral triangle inscribed at radius R_{q,ε}."""
    radius = r_q_eps(q, eps)
    return math.pi * (q - 1) - equilateral_triangle_at_radius(radius).area


def corollary_area_and_curvature(q: float, eps: float, tri: ModelTriangle,
                                 samples: Optional[int] = None) -> CorollaryBound:
    """Bounds |Δ| <= π(q − 1) − η and K(Δ) <= −η/q.

    The curvature bound assumes every vertex of Δ has total angle >= 2πq; callers with
    tiling data check that separately.

    Raises:
        PreconditionFailed: If ``tri`` is not spherical, its circumradius exceeds R_{q,ε},
            a sampled inscribed triangle beats the equilateral one, or its area exceeds
            the bound.
    """
    tolerance = config.tolerance
    radius = r_q_eps(q, eps)
    if tri.k != 1:
        raise PreconditionFailed("the triangle is spherical (k = 1)")
    if tri.circumradius() > radius + tolerance:
        raise PreconditionFailed(
            f"circumradius {tri.circumradius():.12g} <= R_q,eps = {radius:.12g}")

    equilateral, sampled = max_inscribed_area(radius, samples)
    if sampled > equilateral + MAXIMIZER_SLACK:
        raise PreconditionFailed(
            f"equilateral maximizer: sampled area {sampled:.12g} exceeds {equilateral:.12g}")

    eta = math.pi * (q - 1) - equilateral
    area_bound = math.pi * (q - 1) - eta
    if tri.area > area_bound + tolerance:
        raise PreconditionFailed(f"area {tri.area:.12g} <= pi (q - 1) - eta = {area_bound:.12g}")
    logger.debug(f"Corollary bounds for q={q}, eps={eps}: eta={eta:.12g}")
    return CorollaryBound(area_bound=area_bound, K_bound=-eta / q)
