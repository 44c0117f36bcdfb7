"""Shared test fixtures for line complexes, tilings and loggers."""

import logging
import math
from typing import Iterator

import pytest

from conformal_type_lab.line_complex import Edge, LineComplex, closed, regular
from conformal_type_lab.tiling import Tiling, Triangle


@pytest.fixture
def digon() -> LineComplex:
    """The closed complex of degree 2 on two vertices: two faces with m = 1."""
    return LineComplex(
        2,
        {"c0": "o", "x0": "x"},
        [Edge("c0", "x0", 1), Edge("c0", "x0", 2)],
    )


@pytest.fixture
def square() -> LineComplex:
    """closed(2, 3): a 4-cycle with two faces of m = 1 and two of m = 2, excess 1."""
    return closed(2, 3)


@pytest.fixture
def open_edge() -> LineComplex:
    """A single edge of a degree-3 complex with the other half-edges on the frontier."""
    return LineComplex(
        3,
        {"c0": "o", "x0": "x"},
        [Edge("c0", "x0", 1)],
        frontier=[("c0", 2), ("c0", 3), ("x0", 2), ("x0", 3)],
    )


@pytest.fixture
def trivalent_tree() -> LineComplex:
    """Radius-3 truncation of the q = 3 tree with every face logarithmic and declared."""
    return regular(3, (math.inf, math.inf, math.inf), 3, declare_faces=True)


@pytest.fixture
def flat_triangle() -> Tiling:
    """One unit equilateral flat tile whose vertices have total angle 4π."""
    triangle = Triangle(
        id="t1",
        vertices=("a", "b", "c"),
        angles=(math.pi / 3,) * 3,
        lengths=(1.0, 1.0, 1.0),
        k=0.0,
    )
    return Tiling({"a": 4 * math.pi, "b": 4 * math.pi, "c": 4 * math.pi}, [triangle],
                  {"C1": ["t1"]})


@pytest.fixture
def flat_strip() -> Tiling:
    """Two flat equilateral tiles sharing the side bc, all vertices regular (2π)."""
    angles = (math.pi / 3,) * 3
    triangles = [
        Triangle("t1", ("a", "b", "c"), angles, (1.0, 1.0, 1.0), 0.0),
        Triangle("t2", ("b", "d", "c"), angles, (1.0, 1.0, 1.0), 0.0),
    ]
    vertices = {v: 2 * math.pi for v in "abcd"}
    return Tiling(vertices, triangles, {"C1": ["t1", "t2"]})


@pytest.fixture
def capture_logs(caplog) -> Iterator:
    """Attach caplog to a package logger, which does not propagate to the root logger."""
    attached = []

    def attach(logger: logging.Logger):
        logger.addHandler(caplog.handler)
        attached.append(logger)
        return caplog

    yield attach
    for logger in attached:
        logger.removeHandler(caplog.handler)
