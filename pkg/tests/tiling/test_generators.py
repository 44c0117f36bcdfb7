"""Tests for the regular triangulation patches and random unions."""

import math

import networkx as nx
import numpy as np
import pytest

from conformal_type_lab.errors import DomainError
from conformal_type_lab.tiling import (
    angular_curvature, equilateral_side, random_simply_connected_union,
    regular_triangle_patch,)


class TestEquilateralSide:
    """Model curvature and side of an equilateral tile."""

    def test_flat(self) -> None:
        assert equilateral_side(math.pi / 3) == (0.0, 1.0)

    def test_tetrahedral_face(self) -> None:
        k, side = equilateral_side(2 * math.pi / 3)

        assert k == 1.0
        assert side == pytest.approx(math.acos(-1 / 3))

    def test_octant(self) -> None:
        assert equilateral_side(math.pi / 2) == (1.0, pytest.approx(math.pi / 2))

    def test_hyperbolic(self) -> None:
        k, side = equilateral_side(2 * math.pi / 7)

        assert k == -1.0
        assert side > 0

    @pytest.mark.parametrize("angle", [0.0, math.pi, -1.0])
    def test_domain(self, angle: float) -> None:
        with pytest.raises(DomainError):
            equilateral_side(angle)


class TestRegularTrianglePatch:
    """Patches of {3, p}."""

    @pytest.mark.parametrize("p, radius, triangles, vertices", [
        (3, 1, 4, 4),
        (4, 3, 8, 6),
        (5, 5, 20, 12),
    ])
    def test_spherical_tilings_close_up(self, p, radius, triangles, vertices) -> None:
        tiling = regular_triangle_patch(p, radius)
        total = math.fsum(angular_curvature(tiling, tid) for tid in tiling.triangle_ids)

        assert len(tiling) == triangles
        assert len(tiling.vertex_ids) == vertices
        assert total == pytest.approx(4 * math.pi)

    def test_flat_patch(self) -> None:
        tiling = regular_triangle_patch(6, 1)

        assert len(tiling) == 4
        assert len(tiling.vertex_ids) == 6
        assert tiling.neighbors("t0") == ["t1", "t2", "t3"]
        for tid in tiling.triangle_ids:
            assert angular_curvature(tiling, tid) == pytest.approx(0.0, abs=1e-9)

    def test_hyperbolic_patch_curvature(self) -> None:
        tiling = regular_triangle_patch(7, 2)

        assert len(tiling) == 10
        for tid in tiling.triangle_ids:
            assert angular_curvature(tiling, tid) == pytest.approx(6 * math.pi / 7 - math.pi)

    def test_cone_points(self) -> None:
        tiling = regular_triangle_patch(8, 1, corner_angle=math.pi / 3)

        assert all(total == pytest.approx(8 * math.pi / 3)
                   for total in tiling.total_angles.values())
        assert tiling.triangle("t0").k == 0.0
        assert angular_curvature(tiling, "t0") == pytest.approx(-math.pi / 4)

    def test_singleton_clusters(self) -> None:
        tiling = regular_triangle_patch(6, 1)

        assert tiling.cluster_of() == {tid: f"C{tid}" for tid in tiling.triangle_ids}

    @pytest.mark.parametrize("p, radius", [(2, 1), (6, -1)])
    def test_domain(self, p: int, radius: int) -> None:
        with pytest.raises(DomainError):
            regular_triangle_patch(p, radius)


class TestRandomUnion:
    """Seeded growth of simply connected unions."""

    def test_reproducible(self) -> None:
        tiling = regular_triangle_patch(7, 2)
        first = random_simply_connected_union(tiling, 6, np.random.default_rng(3))
        second = random_simply_connected_union(tiling, 6, np.random.default_rng(3))

        assert first == second
        assert 1 <= len(first) <= 6

    def test_connected(self) -> None:
        tiling = regular_triangle_patch(6, 2)
        union = random_simply_connected_union(tiling, 5, np.random.default_rng(0))
        graph = tiling.adjacency_graph().subgraph(union)

        assert 1 <= len(union) <= 5
        assert nx.is_connected(graph)

    def test_empty(self) -> None:
        tiling = regular_triangle_patch(6, 1)

        assert random_simply_connected_union(tiling, 0, np.random.default_rng(0)) == []
