"""Tests for the hyperbolicity certificates on line complexes."""

import math
from fractions import Fraction
from unittest.mock import patch

import networkx as nx
import pytest

from conformal_type_lab.certificates import (
    HYPERBOLIC, INCONCLUSIVE, PIECE_INCONCLUSIVE, SPHERICAL_ISOPERIMETRIC_ANNOTATION, VIOLATED,)
from conformal_type_lab.corpus import make_rng, random_regular_schemes
from conformal_type_lab.errors import DomainError, InvalidPartition, TooLarge, UnresolvedExcess
from conformal_type_lab.line_complex import LineComplex, closed, generate, regular
from conformal_type_lab.partitioner import (
    CONSTRUCTIVE, EXHAUSTIVE, GraphPartition, certify_regularly_ramified, certify_T2,
    certify_Tfinal, connected_subsets,)


@pytest.fixture
def star() -> LineComplex:
    """The radius-one truncation of the trivalent tree, with declared faces."""
    return regular(3, (math.inf,) * 3, 1, declare_faces=True)


class TestConnectedSubsets:
    """Each connected vertex set is produced once."""

    @pytest.mark.parametrize("graph, expected", [
        (nx.cycle_graph(["a", "b", "c", "d"]), 13),
        (nx.complete_graph(["a", "b", "c"]), 7),
        (nx.path_graph(["a", "b", "c"]), 6),
        (nx.star_graph(3), 11),
    ])
    def test_counts(self, graph: nx.Graph, expected: int) -> None:
        order = sorted(graph.nodes, key=str)
        subsets = list(connected_subsets(graph, order, order))

        assert len(subsets) == expected
        assert len(set(subsets)) == expected
        assert all(nx.is_connected(graph.subgraph(s)) for s in subsets)

    @pytest.mark.parametrize("graph, max_size, expected", [
        (nx.path_graph(["a", "b", "c"]), 2, 5),
        (nx.cycle_graph(["a", "b", "c", "d"]), 2, 8),
        (nx.cycle_graph(["a", "b", "c", "d"]), 3, 12),
    ])
    def test_bounded_by_size(self, graph: nx.Graph, max_size: int, expected: int) -> None:
        order = sorted(graph.nodes, key=str)
        subsets = list(connected_subsets(graph, order, order, max_size=max_size))

        assert len(subsets) == len(set(subsets)) == expected
        assert max(len(s) for s in subsets) == max_size


class TestCertifyT2:
    """(M1)' and (M2)' on a supplied partition."""

    def test_tree_singletons_are_hyperbolic(self, trivalent_tree: LineComplex) -> None:
        certificate = certify_T2(trivalent_tree, GraphPartition.singletons(trivalent_tree), 1, 1)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.annotation == SPHERICAL_ISOPERIMETRIC_ANNOTATION
        assert certificate.witness is None
        assert len(certificate.pieces) == 22
        assert certificate.pieces[0].total == -1

    def test_positive_excess_violates_M2(self, square: LineComplex) -> None:
        certificate = certify_T2(square, GraphPartition.singletons(square), Fraction(1, 2), 1)

        assert certificate.verdict == VIOLATED
        assert certificate.witness["condition"] == "M2'"
        assert certificate.witness["piece"] == "c0"
        assert certificate.witness["excess_sum"] == {"num": 1, "den": 1}
        assert certificate.violations == ["M2'"]
        assert certificate.annotation is None

    def test_oversized_piece_violates_M1(self, trivalent_tree: LineComplex) -> None:
        partition = GraphPartition.from_vertex_lists(
            trivalent_tree, [("all", trivalent_tree.vertex_ids)])
        certificate = certify_T2(trivalent_tree, partition, 1, 5)

        assert certificate.verdict == VIOLATED
        assert certificate.pieces[0].violations == ["M1'"]
        assert certificate.pieces[0].total == -22
        assert "22 > M = 5" in certificate.witness["detail"]

    def test_frontier_pieces_are_inconclusive(self, capture_logs) -> None:
        from conformal_type_lab.partitioner import certify

        caplog = capture_logs(certify.logger)
        tree = regular(3, (math.inf,) * 3, 2)
        certificate = certify_T2(tree, GraphPartition.singletons(tree), 1, 1)

        assert certificate.verdict == INCONCLUSIVE
        assert {piece.status for piece in certificate.pieces} == {PIECE_INCONCLUSIVE}
        assert certificate.notes[0].startswith("pieces meeting the frontier")
        assert "were not checked" in caplog.text

    def test_partition_must_cover(self, square: LineComplex) -> None:
        partition = GraphPartition.from_vertex_lists(square, [("A", ["c0", "x0"])])

        with pytest.raises(InvalidPartition):
            certify_T2(square, partition, 1, 2)

    @pytest.mark.parametrize("eps, M", [(0, 1), (-1, 1), (1, 0)])
    def test_domain(self, square: LineComplex, eps, M: int) -> None:
        with pytest.raises(DomainError):
            certify_T2(square, GraphPartition.singletons(square), eps, M)

    def test_parallel_matches_serial(self, trivalent_tree: LineComplex) -> None:
        partition = GraphPartition.singletons(trivalent_tree)
        serial = certify_T2(trivalent_tree, partition, "1/2", 1)
        parallel = certify_T2(trivalent_tree, partition, "1/2", 1, parallel=True)

        assert parallel.to_dict() == serial.to_dict()

    def test_to_dict(self, square: LineComplex) -> None:
        data = certify_T2(square, GraphPartition.singletons(square), "1/2", 1).to_dict()

        assert data["eps"] == {"num": 1, "den": 2}
        assert data["q"] == 3
        assert data["pieces"][0]["excess_sum"] == {"num": 1, "den": 1}
        assert data["pieces"][0]["status"] == "violated"

    def test_pieces_frame(self, square: LineComplex) -> None:
        frame = certify_T2(square, GraphPartition.singletons(square), 1, 1).pieces_frame()

        assert list(frame["id"]) == ["c0", "c1", "x0", "x1"]
        assert list(frame["excess_sum_num"]) == [1, 1, 1, 1]


class TestRegularlyRamified:
    """The M = 1 criterion with ε = −E."""

    def test_tree(self, trivalent_tree: LineComplex) -> None:
        certificate = certify_regularly_ramified(trivalent_tree)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.theorem == "T2 (M=1)"
        assert certificate.M == 1
        assert certificate.eps == 1
        assert "regularly ramified with E = -1" in certificate.notes

    def test_positive_excess(self, square: LineComplex) -> None:
        certificate = certify_regularly_ramified(square)

        assert certificate.verdict == VIOLATED
        assert certificate.eps == 1

    def test_unresolved(self, open_edge: LineComplex) -> None:
        with pytest.raises(UnresolvedExcess):
            certify_regularly_ramified(open_edge)


class TestCertifyTfinal:
    """The uniform condition on connected subgraphs of size >= M."""

    def test_exhaustive_finds_violation(self, square: LineComplex) -> None:
        certificate = certify_Tfinal(square, 1, 2, mode=EXHAUSTIVE)

        assert certificate.verdict == VIOLATED
        assert certificate.pieces[0].id == "S1"
        assert certificate.pieces[0].ids == ["c0", "x0"]
        assert certificate.witness["condition"] == "M2'"

    def test_exhaustive_on_star(self, star: LineComplex) -> None:
        certificate = certify_Tfinal(star, 1, 2, mode=EXHAUSTIVE)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.notes == ["exhaustive: all 7 connected subgraphs of size >= 2 checked"]

    def test_star_is_hyperbolic_in_both_modes(self, star: LineComplex) -> None:
        assert certify_Tfinal(star, 1, 2, mode=EXHAUSTIVE).is_hyperbolic
        assert certify_Tfinal(star, 1, 2, mode=CONSTRUCTIVE).is_hyperbolic

    @pytest.mark.parametrize("eps", [3, 4])
    def test_constructive_finds_violations_inside_a_piece(self, star: LineComplex,
                                                          eps: int) -> None:
        exhaustive = certify_Tfinal(star, eps, 2, mode=EXHAUSTIVE)
        constructive = certify_Tfinal(star, eps, 2, mode=CONSTRUCTIVE)

        assert exhaustive.verdict == VIOLATED
        assert constructive.verdict == VIOLATED
        assert constructive.annotation is None
        assert constructive.pieces[-1].id == "S1"
        assert constructive.pieces[-1].size == 2
        assert constructive.witness["condition"] == "M2'"
        assert constructive.witness["excess_sum"] == {"num": -2, "den": 1}

    def test_modes_agree_on_small_corpus(self) -> None:
        corpus = [closed(n, q) for n in range(1, 7) for q in (2, 3, 4)]
        corpus += [regular(q, (math.inf,) * q, 1, declare_faces=True) for q in (3, 4)]
        rng = make_rng(6)
        for radius in (1, 2):
            schemes = random_regular_schemes(rng, 15, degrees=(3, 4) if radius == 1 else (3,),
                                             radius=radius)
            corpus += [generate(scheme) for scheme in schemes]
        eps_values = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]

        verdicts = set()
        assert len(corpus) == 50
        for index, complex_ in enumerate(corpus):
            assert len(complex_) <= 15
            eps, M = eps_values[index % 4], 2 + index % 3
            exhaustive = certify_Tfinal(complex_, eps, M, mode=EXHAUSTIVE)
            constructive = certify_Tfinal(complex_, eps, M, mode=CONSTRUCTIVE)
            assert constructive.verdict == exhaustive.verdict, (index, eps, M)
            verdicts.add(exhaustive.verdict)
        assert {HYPERBOLIC, VIOLATED} <= verdicts

    def test_window_budget_makes_it_inconclusive(self, trivalent_tree: LineComplex,
                                                 capture_logs) -> None:
        from conformal_type_lab.partitioner import certify

        caplog = capture_logs(certify.logger)
        settings = {"exhaustive_cap": 15, "window_budget": 3, "parallel_workers": 4}
        with patch.object(certify.config, "get_partitioner_settings", return_value=settings):
            certificate = certify_Tfinal(trivalent_tree, 1, 2)

        assert certificate.verdict == INCONCLUSIVE
        assert certificate.annotation is None
        assert certificate.notes[-1] == \
            "constructive: window_budget reached after 3 connected subgraphs"
        assert "Stopped after 3 connected subgraphs" in caplog.text

    def test_constructive_tree(self, trivalent_tree: LineComplex) -> None:
        certificate = certify_Tfinal(trivalent_tree, 1, 2)

        assert certificate.verdict == HYPERBOLIC
        assert certificate.theorem == "Tfinal"
        assert certificate.M == 2
        assert certificate.notes[-1].startswith("constructive:")
        assert sum(piece.size for piece in certificate.pieces) == 22

    def test_too_few_vertices(self, square: LineComplex) -> None:
        certificate = certify_Tfinal(square, 1, 5)

        assert certificate.verdict == INCONCLUSIVE

    def test_exhaustive_cap(self, trivalent_tree: LineComplex) -> None:
        with pytest.raises(TooLarge):
            certify_Tfinal(trivalent_tree, 1, 2, mode=EXHAUSTIVE)

    @pytest.mark.parametrize("eps, M, mode", [
        (1, 1, CONSTRUCTIVE),
        (0, 2, CONSTRUCTIVE),
        (1, 2, "greedy"),
    ])
    def test_domain(self, square: LineComplex, eps, M: int, mode: str) -> None:
        with pytest.raises(DomainError):
            certify_Tfinal(square, eps, M, mode=mode)
