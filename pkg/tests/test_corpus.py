"""Property checks over seeded random corpora."""

import math
from unittest.mock import patch

import networkx as nx
import pytest

from conformal_type_lab.corpus import (
    make_rng, random_bounded_degree_graph, random_face_schemes, random_half_perimeters,
    random_regular_schemes, random_unions,)
from conformal_type_lab.line_complex import (
    excess_from_half_perimeters, excess_report, generate, validate,)
from conformal_type_lab.tiling import euler_boundary_identity, regular_triangle_patch


class TestRng:
    """Generators are seeded from the configuration."""

    def test_explicit_seed(self) -> None:
        assert make_rng(3).random() == make_rng(3).random()

    def test_configured_seed(self) -> None:
        with patch("conformal_type_lab.corpus.config") as mock_config:
            mock_config.seed = 11
            assert make_rng().random() == make_rng(11).random()


class TestHalfPerimeters:
    """Random face schemes."""

    def test_ranges(self) -> None:
        values = random_half_perimeters(make_rng(0), 200, m_max=4)

        assert len(values) == 200
        assert all(math.isinf(m) or 1 <= m <= 4 for m in values)

    @pytest.mark.parametrize("probability, expected_inf", [(0.0, False), (1.0, True)])
    def test_infinity_probability(self, probability: float, expected_inf: bool) -> None:
        values = random_half_perimeters(make_rng(1), 20, inf_probability=probability)

        assert all(math.isinf(m) == expected_inf for m in values)

    def test_regular_schemes_build_valid_complexes(self) -> None:
        for scheme in random_regular_schemes(make_rng(2), 6, radius=1):
            complex_ = generate(scheme)
            report = excess_report(complex_)

            assert len(scheme.m) == scheme.q
            assert all(math.isinf(m) or m >= 2 for m in scheme.m)
            assert validate(complex_) == []
            assert report.regular_value == excess_from_half_perimeters(scheme.q, scheme.m)


class TestUnions:
    """Random simply connected unions satisfy the Euler identity."""

    def test_unions_of_a_flat_patch(self) -> None:
        patch_tiling = regular_triangle_patch(6, 2)

        unions = random_unions(patch_tiling, 8, 5, make_rng(4))

        assert len(unions) == 8
        for union in unions:
            assert 1 <= len(union) <= 5
            assert euler_boundary_identity(patch_tiling, union).residual == 0


class TestGraphsAndSchemes:
    """Bounded-degree graphs and half-sheet schemes."""

    @pytest.mark.parametrize("size, q, extra", [(1, 2, 0), (12, 2, 3), (60, 3, 20), (80, 5, 40)])
    def test_bounded_degree_graph(self, size: int, q: int, extra: int) -> None:
        graph = random_bounded_degree_graph(make_rng(size), size, q, extra)

        assert graph.number_of_nodes() == size
        assert nx.is_connected(graph)
        assert max(degree for _, degree in graph.degree()) <= q

    def test_bounded_degree_graph_domain(self) -> None:
        with pytest.raises(ValueError):
            random_bounded_degree_graph(make_rng(0), 5, 1)

    def test_face_schemes(self) -> None:
        schemes = random_face_schemes(make_rng(3), 40)

        assert len(schemes) == 40
        for q, m in schemes:
            assert 3 <= q <= 8
            assert len(m) == q
            assert set(m) <= {1, 2, 3, 5, math.inf}
