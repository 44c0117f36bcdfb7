"""Tests for the area and curvature bounds of small spherical triangles."""

import math

import pytest

from conformal_type_lab.errors import PreconditionFailed
from conformal_type_lab.spherical import (
    ModelTriangle, corollary_area_and_curvature, corollary_eta, equilateral_triangle_at_radius,
    max_inscribed_area, r_q_eps,)


@pytest.fixture
def octant() -> ModelTriangle:
    return ModelTriangle.from_unit_vectors((1, 0, 0), (0, 1, 0), (0, 0, 1))


class TestEta:
    """η vanishes without a shift and grows with ε."""

    @pytest.mark.parametrize("q", [1.5, 2.0, 2.5])
    def test_unshifted_radius(self, q: float) -> None:
        assert corollary_eta(q, 0) == pytest.approx(0.0, abs=1e-9)

    def test_monotone_in_eps(self) -> None:
        values = [corollary_eta(2, eps) for eps in (0.05, 0.1, 0.2)]

        assert 0 < values[0] < values[1] < values[2]


class TestInscribedArea:
    """The equilateral triangle maximizes inscribed area."""

    @pytest.mark.parametrize("radius", [0.3, 0.9, 1.4])
    def test_sampled_areas_do_not_beat_equilateral(self, radius: float) -> None:
        equilateral, sampled = max_inscribed_area(radius, samples=2000, seed=1)

        assert equilateral == pytest.approx(equilateral_triangle_at_radius(radius).area)
        assert 0 < sampled <= equilateral + 1e-9

    def test_reproducible(self) -> None:
        assert max_inscribed_area(1.0, 500, seed=5) == max_inscribed_area(1.0, 500, seed=5)

    def test_no_samples(self) -> None:
        assert max_inscribed_area(1.0, samples=0)[1] == 0.0


class TestCorollaryBound:
    """|Δ| <= π(q − 1) − η and K(Δ) <= −η/q."""

    def test_octant(self, octant: ModelTriangle) -> None:
        bound = corollary_area_and_curvature(2, 0.1, octant, samples=500)
        eta = corollary_eta(2, 0.1)

        assert bound.area_bound == pytest.approx(math.pi - eta)
        assert bound.K_bound == pytest.approx(-eta / 2)
        assert octant.area <= bound.area_bound

    def test_equilateral_at_the_radius_is_accepted(self) -> None:
        tri = equilateral_triangle_at_radius(r_q_eps(2.5, 0.1))

        bound = corollary_area_and_curvature(2.5, 0.1, tri, samples=0)
        assert bound.area_bound == pytest.approx(tri.area)

    def test_circumradius_too_large(self, octant: ModelTriangle) -> None:
        with pytest.raises(PreconditionFailed, match="circumradius"):
            corollary_area_and_curvature(1.5, 0.1, octant, samples=0)

    def test_planar_triangle(self) -> None:
        flat = ModelTriangle.from_planar_points((0, 0), (1, 0), (0, 1))

        with pytest.raises(PreconditionFailed, match="spherical"):
            corollary_area_and_curvature(2, 0.1, flat, samples=0)
