"""
Circumradii of spherical equilateral triangles.

``r_q_eps`` evaluates the closed form for the circumradius of the equilateral triangle with
angles πq/3, shifted by ε. ``circumradius_equilateral_oracle`` recovers the same radius by
bisection on explicit unit-vector geometry and serves as an independent check.
"""

import math
from typing import Optional

import numpy as np

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, NoConvergence
from conformal_type_lab.spherical.geometry import ModelTriangle
from conformal_type_lab.utils import create_logger

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)

# q closer than this to 3 takes the limit value of the 0/0 form
Q_LIMIT_TOLERANCE = 1e-9
ANGLE_TOLERANCE = 1e-12


def r_q_eps(q: float, eps: float) -> float:
    """arctan √(−cos(πq/2) / cos³(πq/6)) − ε, with the value π/2 − ε at q = 3.

    Raises:
        DomainError: If q is outside (1, 3], ε < 0 or ε reaches the unshifted radius.
    """
    if not 1 < q <= 3:
        raise DomainError("q", q, "(1, 3]")
    if eps < 0:
        raise DomainError("eps", eps, "eps >= 0")
    if abs(q - 3) < Q_LIMIT_TOLERANCE:
        radius = math.pi / 2
    else:
        ratio = -math.cos(math.pi * q / 2) / math.cos(math.pi * q / 6) ** 3
        radius = math.atan(math.sqrt(ratio))
    if eps >= radius:
        raise DomainError("eps", eps, f"[0, {radius})")
    return radius - eps


def equilateral_vertices(radius: float) -> np.ndarray:
    """Three unit vectors at spherical distance ``radius`` from the north pole, 120° apart."""
    longitudes = np.array([0.0, 2 * math.pi / 3, 4 * math.pi / 3])
    return np.column_stack([
        np.sin(radius) * np.cos(longitudes),
        np.sin(radius) * np.sin(longitudes),
        np.full(3, np.cos(radius)),
    ])


def equilateral_triangle_at_radius(radius: float) -> ModelTriangle:
    """The spherical equilateral triangle inscribed in the circle of the given radius.

    Raises:
        DomainError: If the radius is outside (0, π/2].
    """
    if not 0 < radius <= math.pi / 2:
        raise DomainError("radius", radius, "(0, pi/2]")
    return ModelTriangle.from_unit_vectors(*equilateral_vertices(radius))


def circumradius_equilateral_oracle(angle: float, steps: Optional[int] = None) -> float:
    """The circumradius of the spherical equilateral triangle with the given corner angle.

    The corner angle increases from π/3 (r → 0) to π (r = π/2); r is bisected until the
    angle computed from the unit vectors matches within 1e-12.

    Raises:
        DomainError: If the angle is outside (π/3, π).
        NoConvergence: If the bisection does not converge within ``steps`` steps.
    """
    if not math.pi / 3 < angle < math.pi:
        raise DomainError("angle", angle, "(pi/3, pi)")
    if steps is None:
        steps = config.get_spherical_settings()["bisection_steps"]

    low, high = 0.0, math.pi / 2
    for step in range(steps):
        middle = (low + high) / 2
        corner = equilateral_triangle_at_radius(middle).alpha
        if abs(corner - angle) <= ANGLE_TOLERANCE or high - low <= 1e-15:
            logger.debug(f"Oracle for angle {angle} converged after {step + 1} steps")
            return middle
        if corner < angle:
            low = middle
        else:
            high = middle
    raise NoConvergence(steps)
