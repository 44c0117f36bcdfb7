"""Tests for face tracing and the Euler characteristic of line complexes."""

import math
from fractions import Fraction

import pytest

from conformal_type_lab.errors import UnknownVertex
from conformal_type_lab.line_complex import (
    Edge, LineComplex, classic, closed, euler_characteristic, face_corner_count, trace_faces,)
from conformal_type_lab.line_complex.faces import CLOSED, DECLARED, UNKNOWN


class TestTraceFaces:
    """Face walks on closed and truncated complexes."""

    def test_digon_has_two_faces_of_half_perimeter_one(self, digon: LineComplex) -> None:
        faces = trace_faces(digon)

        assert [face.id for face in faces] == ["1:c0", "2:c0"]
        for face in faces:
            assert face.status == CLOSED
            assert face.m == 1
            assert len(face.boundary) == 2
            assert face.inverse_half_perimeter() == 1

    def test_face_labels_wrap_around(self, digon: LineComplex) -> None:
        faces = trace_faces(digon)

        assert faces["1:c0"].labels == (1, 2)
        assert faces["2:c0"].labels == (2, 1)

    def test_square_face_half_perimeters(self, square: LineComplex) -> None:
        faces = trace_faces(square)
        half_perimeters = sorted(face.m for face in faces)

        assert half_perimeters == [1, 1, 2, 2]
        assert faces.face_at("c0", 2).m == 2
        assert faces.face_at("c0", 2) is faces.face_at("x1", 2)
        assert [face.m for face in faces.faces_at("c0", 3)] == [1, 2, 2]

    def test_open_faces_on_the_frontier(self, open_edge: LineComplex) -> None:
        faces = trace_faces(open_edge)

        assert sorted(face.id for face in faces) == ["1:c0", "2:c0", "2:x0", "3:c0"]
        assert all(face.status == UNKNOWN for face in faces)
        assert faces.unresolved == list(faces)
        assert faces["1:c0"].vertex_ids == ["x0", "c0"]
        assert faces["1:c0"].boundary[-1] == ("c0", "")
        with pytest.raises(ValueError):
            faces["1:c0"].inverse_half_perimeter()

    def test_declared_face_takes_the_declared_value(self, open_edge: LineComplex) -> None:
        from conformal_type_lab.line_complex import FaceDeclaration

        declared = open_edge.with_declarations([FaceDeclaration("x0", 1, math.inf)])
        face = trace_faces(declared)["1:c0"]

        assert face.status == DECLARED
        assert face.is_infinite
        assert face.inverse_half_perimeter() == Fraction(0)

    def test_faces_are_cached_on_the_complex(self, square: LineComplex) -> None:
        assert square.faces() is square.faces()

    @pytest.mark.parametrize("complex_", [
        closed(1, 3), closed(3, 3), closed(2, 5), classic("sine"), classic("exp"),
    ], ids=["closed-1-3", "closed-3-3", "closed-2-5", "sine", "exp"])
    def test_boundaries_alternate_their_label_pair(self, complex_: LineComplex) -> None:
        labels = {edge.id: edge.label for edge in complex_.edges}

        for face in trace_faces(complex_):
            walk = [labels[edge_id] for _, edge_id in face.boundary if edge_id]
            assert set(walk) <= set(face.labels)
            assert all(a != b for a, b in zip(walk, walk[1:]))


class TestFaceCounts:
    """Euler characteristic and corner bookkeeping."""

    @pytest.mark.parametrize("n, q", [(1, 2), (1, 3), (2, 3), (3, 4), (5, 3)])
    def test_closed_complexes_are_planar(self, n: int, q: int) -> None:
        complex_ = closed(n, q)

        assert len(complex_.faces()) == (q - 2) * n + 2
        assert euler_characteristic(complex_) == 2

    def test_corners_add_up_to_q_times_vertices(self, open_edge: LineComplex) -> None:
        closed_corners, open_corners = face_corner_count(open_edge)

        assert closed_corners == 0
        assert closed_corners + open_corners == open_edge.q * len(open_edge)

    def test_closed_corners_on_closed_complex(self, square: LineComplex) -> None:
        assert face_corner_count(square) == (square.q * len(square), 0)


class TestLineComplex:
    """Lookups and identity of the complex data model."""

    def test_neighbor_and_frontier(self, open_edge: LineComplex) -> None:
        assert open_edge.neighbor("c0", 1) == "x0"
        assert open_edge.neighbor("c0", 2) is None
        assert open_edge.is_frontier("x0", 3)
        assert open_edge.frontier_vertices == frozenset({"c0", "x0"})
        assert not open_edge.is_closed

    def test_next_label_is_cyclic(self, square: LineComplex) -> None:
        assert [square.next_label(j) for j in (1, 2, 3)] == [2, 3, 1]

    def test_unknown_vertex(self, square: LineComplex) -> None:
        with pytest.raises(UnknownVertex):
            square.parity("c9")

    def test_equality_ignores_input_order(self) -> None:
        a = LineComplex(2, {"x0": "x", "c0": "o"}, [Edge("c0", "x0", 2), Edge("c0", "x0", 1)])
        b = LineComplex(2, {"c0": "o", "x0": "x"}, [Edge("c0", "x0", 1), Edge("c0", "x0", 2)])

        assert a == b
        assert hash(a) == hash(b)

    def test_relabeled(self, digon: LineComplex) -> None:
        renamed = digon.relabeled({"c0": "a", "x0": "b"})

        assert renamed.vertex_ids == ["a", "b"]
        assert renamed.neighbor("a", 2) == "b"

    def test_vertex_ids_in_natural_order(self) -> None:
        complex_ = closed(11, 2)

        assert complex_.vertex_ids[:3] == ["c0", "c1", "c2"]
        assert complex_.vertex_ids[10:12] == ["c10", "x0"]

    def test_to_networkx_keeps_parallel_edges(self, digon: LineComplex) -> None:
        graph = digon.to_networkx()

        assert graph.number_of_edges() == 2
        assert digon.simple_graph().number_of_edges() == 1
