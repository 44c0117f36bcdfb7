"""Tests for the tiling condition checkers."""

import math
from unittest.mock import patch

import pytest

from conformal_type_lab.certificates import (
    HYPERBOLIC, METRIC_ISOPERIMETRIC_ANNOTATION, VIOLATED,)
from conformal_type_lab.errors import DomainError, MissingCluster, PreconditionFailed
from conformal_type_lab.tiling import (
    Tiling, TilingChecker, Triangle, check_corollary_conditions, check_final_tiling_theorem,
    check_theorem_T,)


@pytest.fixture
def octant() -> Tiling:
    """One spherical octant whose vertices have total angle 4π."""
    triangle = Triangle("s1", ("a", "b", "c"), (math.pi / 2,) * 3, (math.pi / 2,) * 3, 1.0)
    return Tiling({v: 4 * math.pi for v in "abc"}, [triangle], {"C1": ["s1"]})


@pytest.fixture
def apart() -> Tiling:
    """Two flat tiles that share no side, in one cluster."""
    angles = (math.pi / 3,) * 3
    triangles = [
        Triangle("t1", ("a", "b", "c"), angles, (1.0, 1.0, 1.0)),
        Triangle("t2", ("d", "e", "f"), angles, (1.0, 1.0, 1.0)),
    ]
    return Tiling({v: 4 * math.pi for v in "abcdef"}, triangles, {"C1": ["t1", "t2"]})


class TestTheoremT:
    """(M1), (M2), (R1) and (R2) over stored clusters."""

    def test_hyperbolic_with_ledger_and_annotation(self, flat_triangle: Tiling) -> None:
        certificate = check_theorem_T(flat_triangle, 0.5, 1)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.theorem == "T"
        assert certificate.pieces[0].total == pytest.approx(-math.pi / 2)
        assert certificate.annotation == METRIC_ISOPERIMETRIC_ANNOTATION
        assert set(certificate.ledger["constants"]) == {
            "C_length", "C_liso", "C_comb", "C", "C_final"}

    def test_no_annotation_without_side_bounds(self, flat_triangle: Tiling) -> None:
        small = Triangle("t1", ("a", "b", "c"), (math.pi / 3,) * 3, (0.1, 0.1, 0.1))
        tiling = Tiling(flat_triangle.total_angles, [small], {"C1": ["t1"]})
        certificate = check_theorem_T(tiling, 0.5, 1)

        assert certificate.is_hyperbolic
        assert certificate.annotation is None
        assert "no Gromov hyperbolicity remark" in certificate.notes[0]

    def test_curvature_sum_too_large(self, flat_triangle: Tiling) -> None:
        certificate = check_theorem_T(flat_triangle, 0.6, 1)

        assert certificate.verdict == VIOLATED
        assert certificate.witness["condition"] == "M2"
        assert certificate.witness["piece"] == "C1"

    def test_small_angle(self, flat_triangle: Tiling) -> None:
        certificate = check_theorem_T(flat_triangle, 1.1, 1)

        assert certificate.pieces[0].violations == ["M2", "R1"]
        assert certificate.violations == ["M2", "R1"]

    def test_cluster_too_big(self, flat_strip: Tiling) -> None:
        certificate = check_theorem_T(flat_strip, 0.1, 1)

        assert certificate.pieces[0].violations == ["M1", "M2"]
        assert certificate.witness["detail"] == "#(C) = 2 > 1"

    def test_large_spherical_tile(self) -> None:
        big = Triangle("s1", ("a", "b", "c"), (2.5,) * 3, (2.2,) * 3, 1.0)
        tiling = Tiling({v: 12 * math.pi for v in "abc"}, [big], {"C1": ["s1"]})
        certificate = check_theorem_T(tiling, 0.5, 1)

        assert "R2" in certificate.violations

    def test_cluster_must_be_connected(self, apart: Tiling) -> None:
        certificate = check_theorem_T(apart, 0.5, 2)

        assert certificate.violations == ["partition"]

    def test_unassigned_triangle(self, flat_strip: Tiling) -> None:
        with pytest.raises(MissingCluster):
            check_theorem_T(flat_strip.with_clusters({"C1": ["t1"]}), 0.5, 2)

    def test_doubly_assigned_triangle(self, flat_strip: Tiling) -> None:
        tiling = flat_strip.with_clusters({"C1": ["t1", "t2"], "C2": ["t2"]})

        with pytest.raises(MissingCluster, match="is in clusters"):
            check_theorem_T(tiling, 0.5, 2)

    def test_infinite_model_curvature(self) -> None:
        triangle = Triangle("t1", ("a", "b", "c"), (1.0,) * 3, (1.0,) * 3, math.inf)
        tiling = Tiling({v: 2 * math.pi for v in "abc"}, [triangle], {"C1": ["t1"]})

        with pytest.raises(PreconditionFailed):
            check_theorem_T(tiling, 0.5, 1)

    @pytest.mark.parametrize("eps, M", [(0.0, 1), (0.5, 0)])
    def test_domain(self, flat_triangle: Tiling, eps: float, M: int) -> None:
        with pytest.raises(DomainError):
            check_theorem_T(flat_triangle, eps, M)

    def test_parallel_matches_serial(self, flat_strip: Tiling) -> None:
        tiling = flat_strip.singleton_clusters()

        assert check_theorem_T(tiling, 0.1, 1, parallel=True).to_dict() == \
            check_theorem_T(tiling, 0.1, 1).to_dict()

    def test_result_is_logged(self, flat_triangle: Tiling, capture_logs) -> None:
        checker = TilingChecker(flat_triangle)
        caplog = capture_logs(checker.logger)
        checker.check_theorem_T(0.5, 1)

        assert "Theorem T check on 1 clusters: hyperbolic" in caplog.text


class TestFinalTilingTheorem:
    """Clusters built from the triangle adjacency graph."""

    def test_single_tile(self, flat_triangle: Tiling) -> None:
        certificate = check_final_tiling_theorem(flat_triangle, 1.0, 1)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.theorem == "final-tiling"
        assert [piece.id for piece in certificate.pieces] == ["F1"]

    def test_small_component_is_one_cluster(self, flat_triangle: Tiling) -> None:
        certificate = check_final_tiling_theorem(flat_triangle, 1.0, 2)

        assert certificate.is_hyperbolic
        assert certificate.notes[-1].endswith("single clusters: F1")

    def test_flat_strip_violates(self, flat_strip: Tiling) -> None:
        certificate = check_final_tiling_theorem(flat_strip, 0.1, 2)

        assert certificate.verdict == VIOLATED
        assert certificate.witness["condition"] == "M2-final"

    def test_stored_clusters_are_ignored(self, flat_strip: Tiling) -> None:
        unassigned = flat_strip.with_clusters({})

        assert check_final_tiling_theorem(unassigned, 0.1, 1).to_dict() == \
            check_final_tiling_theorem(flat_strip, 0.1, 1).to_dict()


class TestCorollary:
    """Spherical tiles of bounded circumradius with large total angles."""

    def test_octant(self, octant: Tiling) -> None:
        certificate = check_corollary_conditions(octant, 2, 0.1)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.theorem == "corollary"
        assert certificate.M == 1
        assert certificate.eps <= 0.1
        assert any(note.startswith("q = 2, eta = ") for note in certificate.notes)

    def test_total_angle_too_small(self, octant: Tiling) -> None:
        with pytest.raises(PreconditionFailed):
            check_corollary_conditions(octant, 3, 0.1)

    def test_circumradius_too_large(self, octant: Tiling) -> None:
        with pytest.raises(PreconditionFailed, match="circumradius"):
            check_corollary_conditions(octant, 1.5, 0.1)

    def test_flat_tiles_are_rejected(self, flat_triangle: Tiling) -> None:
        with pytest.raises(PreconditionFailed, match="spherical"):
            check_corollary_conditions(flat_triangle, 2, 0.1)

    def test_sampling_is_configurable(self, octant: Tiling) -> None:
        with patch("conformal_type_lab.spherical.corollary.config") as mock_config:
            mock_config.tolerance = 1e-9
            mock_config.seed = 0
            mock_config.get_spherical_settings.return_value = {"inscribed_samples": 10}
            certificate = check_corollary_conditions(octant, 2, 0.1)

        assert certificate.is_hyperbolic
        mock_config.get_spherical_settings.assert_called_once()
