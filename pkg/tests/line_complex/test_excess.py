"""Tests for vertex excess, balls and partial mean excess."""

import math
from fractions import Fraction

import pytest

from conformal_type_lab.errors import UnknownVertex, UnresolvedExcess
from conformal_type_lab.line_complex import (
    LineComplex, ball, ball_growth_ok, excess_from_half_perimeters, excess_report,
    closed, is_regularly_ramified, mean_excess_sequence, regular, vertex_excess,)


class TestVertexExcess:
    """E_p = Σ 1/m_i − q + 2 as an exact rational."""

    @pytest.mark.parametrize("q, m, expected", [
        (2, (1, 1), Fraction(2)),
        (3, (2, 2, math.inf), Fraction(0)),
        (3, (3, 3, 3), Fraction(0)),
        (3, (math.inf, math.inf, math.inf), Fraction(-1)),
        (4, (2, 3, 4, 5), Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 4) + Fraction(1, 5) - 2),
    ])
    def test_from_half_perimeters(self, q, m, expected) -> None:
        value = excess_from_half_perimeters(q, m)

        assert value == expected
        assert isinstance(value, Fraction)

    def test_closed_complexes(self, digon: LineComplex, square: LineComplex) -> None:
        assert vertex_excess(digon, "c0") == 2
        assert vertex_excess(square, "x1") == 1

    def test_unresolved_at_the_frontier(self, open_edge: LineComplex) -> None:
        assert vertex_excess(open_edge, "c0") is None

    def test_unknown_vertex(self, square: LineComplex) -> None:
        with pytest.raises(UnknownVertex):
            vertex_excess(square, "nowhere")

    def test_report(self, square: LineComplex, open_edge: LineComplex) -> None:
        report = excess_report(square)

        assert report.regular_value == 1
        assert report.is_regularly_ramified
        assert excess_report(open_edge).unresolved == ["c0", "x0"]


class TestBalls:
    """Balls around a base vertex of the tree and the honeycomb."""

    def test_tree_ball_sizes(self, trivalent_tree: LineComplex) -> None:
        sizes = [len(ball(trivalent_tree, "c0", j)) for j in range(4)]

        assert sizes == [1 + 3 * (2 ** j - 1) for j in range(4)]

    def test_honeycomb_ball_sizes(self) -> None:
        honeycomb = regular(3, (3, 3, 3), 4)

        assert [len(ball(honeycomb, "c0", j)) for j in range(4)] == [1, 4, 10, 19]

    def test_growth_bound(self, trivalent_tree: LineComplex) -> None:
        assert ball_growth_ok(trivalent_tree, "c0", 2)

    def test_negative_radius(self, square: LineComplex) -> None:
        with pytest.raises(ValueError):
            ball(square, "c0", -1)


class TestMeanExcess:
    """Partial means over growing balls."""

    def test_constant_excess(self, square: LineComplex) -> None:
        rows = mean_excess_sequence(square, "c0", 2)

        assert [(row.j, row.n_j) for row in rows] == [(0, 1), (1, 3), (2, 4)]
        assert all(row.partial_mean == 1 for row in rows)

    def test_tree(self, trivalent_tree: LineComplex) -> None:
        rows = mean_excess_sequence(trivalent_tree, "c0", 3)

        assert [row.n_j for row in rows] == [1, 4, 10, 22]
        assert {row.partial_mean for row in rows} == {Fraction(-1)}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_closed_surfaces_end_at_two_over_n(self, n: int) -> None:
        rows = mean_excess_sequence(closed(n, 3), "c0", 2 * n)

        assert rows[-1].n_j == 2 * n
        assert rows[-1].partial_mean == Fraction(2, n)
        assert all(row.partial_mean == Fraction(2, n) for row in rows)

    def test_unresolved_excess_reports_radius(self) -> None:
        tree = regular(3, (math.inf, math.inf, math.inf), 2)

        with pytest.raises(UnresolvedExcess) as error:
            mean_excess_sequence(tree, "c0", 1)
        assert error.value.j == 0
        assert error.value.vertex_id == "c0"

    def test_negative_jmax(self, square: LineComplex) -> None:
        with pytest.raises(ValueError):
            mean_excess_sequence(square, "c0", -1)


class TestRegularRamification:
    """A common excess value across all vertices."""

    def test_regular(self, square: LineComplex, trivalent_tree: LineComplex) -> None:
        assert is_regularly_ramified(square) == 1
        assert is_regularly_ramified(trivalent_tree) == -1

    def test_cube(self) -> None:
        cube = regular(3, (2, 2, 2), 3)

        assert cube.is_closed
        assert len(cube) == 8
        assert is_regularly_ramified(cube) == Fraction(1, 2)

    def test_unresolved(self, open_edge: LineComplex) -> None:
        with pytest.raises(UnresolvedExcess):
            is_regularly_ramified(open_edge)
