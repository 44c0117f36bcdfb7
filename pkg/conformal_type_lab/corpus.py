"""
Seeded randomized corpora for tests and experiments.

Every generator draws from ``numpy.random.default_rng`` seeded by ``config.seed``, which the
``CTL_SEED`` environment variable overrides, so a failing run is reproduced by its seed.
"""

import math
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from conformal_type_lab.config import config
from conformal_type_lab.line_complex.complex import HalfPerimeter
from conformal_type_lab.line_complex.generators import RegularScheme
from conformal_type_lab.tiling.generators import random_simply_connected_union
from conformal_type_lab.tiling.tiling import Tiling
from conformal_type_lab.utils import create_logger

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(config.seed if seed is None else seed)


def random_half_perimeters(rng: np.random.Generator, q: int, m_max: int = 6,
                           inf_probability: float = 0.25) -> List[HalfPerimeter]:
    """q half-perimeters, each ``inf`` with the given probability and else in 1..m_max."""
    values: List[HalfPerimeter] = []
    for _ in range(q):
        if rng.random() < inf_probability:
            values.append(math.inf)
        else:
            values.append(int(rng.integers(1, m_max + 1)))
    return values


def random_regular_schemes(rng: np.random.Generator, count: int,
                           degrees: Sequence[int] = (3, 4), m_max: int = 6,
                           radius: int = 2) -> List[RegularScheme]:
    """Regular face schemes with every finite m at least 2 and all faces declared."""
    schemes = []
    for _ in range(count):
        q = int(rng.choice(degrees))
        m = tuple(max(2, value) if not math.isinf(value) else value
                  for value in random_half_perimeters(rng, q, m_max))
        schemes.append(RegularScheme(q=q, m=m, radius=radius, declare_faces=True))
    logger.debug(f"Drew {count} regular schemes")
    return schemes


def random_unions(tiling: Tiling, count: int, size: int,
                  rng: np.random.Generator) -> List[List[str]]:
    """``count`` random simply connected unions of at most ``size`` tiles."""
    unions = [random_simply_connected_union(tiling, size, rng) for _ in range(count)]
    logger.debug(f"Drew {count} unions of up to {size} tiles from {len(tiling)} tiles")
    return unions


def random_face_schemes(rng: np.random.Generator, count: int,
                        degrees: Sequence[int] = tuple(range(3, 9)),
                        half_perimeters: Sequence[HalfPerimeter] = (1, 2, 3, 5, math.inf),
                        ) -> List[Tuple[int, Tuple[HalfPerimeter, ...]]]:
    """``count`` pairs (q, m) with q drawn from ``degrees`` and each m_j from
    ``half_perimeters``."""
    schemes = []
    for _ in range(count):
        q = int(rng.choice(degrees))
        picks = rng.integers(len(half_perimeters), size=q)
        schemes.append((q, tuple(half_perimeters[int(i)] for i in picks)))
    return schemes


def random_bounded_degree_graph(rng: np.random.Generator, size: int, q: int,
                                extra_edges: int = 0) -> nx.Graph:
    """A connected graph on ``v0``..``v<size-1>`` with every degree at most q.

    A random tree is grown by attaching each new vertex to a vertex of degree below q;
    up to ``extra_edges`` chords between such vertices are then added.
    """
    if size < 1 or q < 2:
        raise ValueError(f"size >= 1 and q >= 2 required, got size={size}, q={q}")
    graph = nx.Graph()
    graph.add_node("v0")
    open_vertices = ["v0"]
    for i in range(1, size):
        target = open_vertices[int(rng.integers(len(open_vertices)))]
        graph.add_edge(f"v{i}", target)
        open_vertices.append(f"v{i}")
        if graph.degree(target) == q:
            open_vertices.remove(target)
    for _ in range(extra_edges):
        if len(open_vertices) < 2:
            break
        a, b = (open_vertices[int(i)] for i in rng.choice(len(open_vertices), 2, replace=False))
        if graph.has_edge(a, b):
            continue
        graph.add_edge(a, b)
        open_vertices = [v for v in open_vertices if graph.degree(v) < q]
    return graph
