"""
Generators for line complexes used as test corpora and CLI inputs.

``regular`` complexes are Cayley graphs of the group generated by involutions
l_1..l_q with relators (l_j l_{j+1})^{m_j}: every vertex then sees the face scheme
m_1..m_q in label order. The graph is enumerated with :class:`CosetTable` and cut down to
a ball around the identity; the half-edges leaving the ball become frontier entries.
"""

import dataclasses
import math
import time
from collections import deque
from typing import Dict, List, Sequence, Tuple, Union

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, InfeasibleScheme
from conformal_type_lab.line_complex.complex import (
    CIRCLE, CROSS, Edge, FaceDeclaration, HalfPerimeter, LineComplex,)
from conformal_type_lab.line_complex.coset_table import CosetTable
from conformal_type_lab.line_complex.faces import CLOSED, UNKNOWN
from conformal_type_lab.utils import (
    create_logger, format_half_perimeter, parse_half_perimeter,)

CLASSIC_SCHEMES: Dict[str, Tuple[int, Tuple[HalfPerimeter, ...]]] = {
    "exp": (2, (math.inf, math.inf)),
    "sine": (3, (2, 2, math.inf)),
    "punctured-sphere-cover": (3, (math.inf, math.inf, math.inf)),
}


@dataclasses.dataclass(frozen=True)
class RegularScheme:
    q: int
    m: Tuple[HalfPerimeter, ...]
    radius: int
    declare_faces: bool = False


@dataclasses.dataclass(frozen=True)
class ClosedScheme:
    n: int
    q: int


@dataclasses.dataclass(frozen=True)
class ClassicScheme:
    name: str
    radius: int = 3


Scheme = Union[RegularScheme, ClosedScheme, ClassicScheme]


class RegularComplexBuilder:
    """Builds the truncation of the regular complex with face scheme ``m``.

    Args:
        q (int): Degree, at least 2.
        m (Sequence[HalfPerimeter]): Half-perimeters m_1..m_q of the faces between labels
            (j, j+1) at every vertex; ``math.inf`` for logarithmic faces.
        radius (int): Truncation radius around the base vertex ``c0``.
    """

    def __init__(self, q: int, m: Sequence[HalfPerimeter], radius: int):
        if q < 2:
            raise DomainError("q", q, "integers >= 2")
        if radius < 0:
            raise DomainError("radius", radius, "integers >= 0")
        if len(m) != q:
            raise InfeasibleScheme(f"expected {q} half-perimeters, got {len(m)}")
        for value in m:
            if not math.isinf(value) and (value < 1 or int(value) != value):
                raise InfeasibleScheme(f"half-perimeter {value!r} is not a positive integer")
        self.q = q
        self.m = tuple(value if math.isinf(value) else int(value) for value in m)
        self.radius = radius
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )

    def relators(self) -> List[List[int]]:
        words = []
        for j, m_j in enumerate(self.m):
            if not math.isinf(m_j):
                words.append([j, (j + 1) % self.q] * m_j)
        return words

    def build(self, declare_faces: bool = False) -> LineComplex:
        """Enumerate, truncate and verify the complex.

        Raises:
            InfeasibleScheme: If the enumerated faces contradict the scheme.
            TooLarge: If the coset budget is exhausted.
        """
        start_time = time.time()
        finite = [m_j for m_j in self.m if not math.isinf(m_j)]
        margin = (max(finite) if finite else 1) + 1
        table = CosetTable(self.q, self.relators())
        table.enumerate(self.radius + margin)

        distances = self._ball_distances(table)
        ids = self._vertex_ids(distances)
        complex_ = self._to_complex(table, distances, ids)
        self._verify(complex_, {ids[c]: d for c, d in distances.items()})
        if declare_faces:
            complex_ = complex_.with_declarations(self._declarations(complex_))

        scheme = ", ".join(map(format_half_perimeter, self.m))
        self.logger.info(
            f"Built regular complex q={self.q} m=({scheme}) r={self.radius}: "
            f"{len(complex_)} vertices, {len(complex_.frontier)} frontier half-edges "
            f"in {time.time() - start_time:.3f} seconds"
        )
        return complex_

    def _ball_distances(self, table: CosetTable) -> Dict[int, int]:
        distances = {table.start: 0}
        queue = deque([table.start])
        while queue:
            c = queue.popleft()
            if distances[c] == self.radius:
                continue
            for gen in range(self.q):
                nxt = table.follow(c, gen)
                if nxt is not None and nxt not in distances:
                    distances[nxt] = distances[c] + 1
                    queue.append(nxt)
        return distances

    @staticmethod
    def _vertex_ids(distances: Dict[int, int]) -> Dict[int, str]:
        counters = {CIRCLE: 0, CROSS: 0}
        ids = {}
        # distances preserves breadth-first insertion order
        for c, distance in distances.items():
            parity = CIRCLE if distance % 2 == 0 else CROSS
            prefix = "c" if parity == CIRCLE else "x"
            ids[c] = f"{prefix}{counters[parity]}"
            counters[parity] += 1
        return ids

    def _to_complex(self, table: CosetTable, distances: Dict[int, int],
                    ids: Dict[int, str]) -> LineComplex:
        vertices = {
            ids[c]: CIRCLE if distance % 2 == 0 else CROSS for c, distance in distances.items()
        }
        edges: List[Edge] = []
        frontier: List[Tuple[str, int]] = []
        for c, distance in distances.items():
            for gen in range(self.q):
                nxt = table.follow(c, gen)
                if nxt is None or nxt not in distances:
                    frontier.append((ids[c], gen + 1))
                elif distance % 2 == 0:
                    edges.append(Edge(ids[c], ids[nxt], gen + 1))
        return LineComplex(self.q, vertices, edges, frontier)

    def _verify(self, complex_: LineComplex, distances: Dict[str, int]) -> None:
        for face in complex_.faces():
            expected = self.m[face.j - 1]
            if face.status == CLOSED:
                if math.isinf(expected) or face.m != expected:
                    raise InfeasibleScheme(
                        f"face {face.id} closes with m={face.m}, the scheme requires "
                        f"m_{face.j}={format_half_perimeter(expected)}"
                    )
                continue
            if math.isinf(expected):
                continue
            nearest = min(distances[v] for v in face.vertex_ids)
            if nearest <= self.radius - expected:
                raise InfeasibleScheme(
                    f"face {face.id} should close inside radius {self.radius} with "
                    f"m_{face.j}={expected} but leaves the truncation"
                )

    def _declarations(self, complex_: LineComplex) -> List[FaceDeclaration]:
        declarations = []
        for face in complex_.faces():
            if face.status == UNKNOWN:
                anchor = face.id.split(":", 1)[1]
                declarations.append(FaceDeclaration(anchor, face.j, self.m[face.j - 1]))
        return declarations


def regular(q: int, m: Sequence[HalfPerimeter], radius: int,
            declare_faces: bool = False) -> LineComplex:
    """Truncation to ``radius`` of the regular complex with face scheme m_1..m_q.

    With ``declare_faces`` every face leaving the truncation is declared with its scheme
    half-perimeter, so that every vertex has resolved excess.
    """
    return RegularComplexBuilder(q, m, radius).build(declare_faces)


def closed(n: int, q: int) -> LineComplex:
    """The n-sheeted closed complex of degree q on 2n vertices.

    Labels 1..q-1 join ``c<i>`` to ``x<i>``; label q joins ``c<i>`` to ``x<i+1 mod n>``.
    The complex has (q-2)·n faces with m = 1 and two faces with m = n, so every vertex
    has excess 2/n.
    """
    if n < 1:
        raise DomainError("n", n, "integers >= 1")
    if q < 2:
        raise DomainError("q", q, "integers >= 2")
    vertices = {}
    for i in range(n):
        vertices[f"c{i}"] = CIRCLE
        vertices[f"x{i}"] = CROSS
    edges = [Edge(f"c{i}", f"x{i}", label) for i in range(n) for label in range(1, q)]
    edges.extend(Edge(f"c{i}", f"x{(i + 1) % n}", q) for i in range(n))
    return LineComplex(q, vertices, edges)


def classic(name: str, radius: int = 3) -> LineComplex:
    """Named classical complexes, always with declared faces.

    ``exp`` is q=2 with two logarithmic faces, ``sine`` is q=3 with m=(2, 2, inf) and
    ``punctured-sphere-cover`` is q=3 with three logarithmic faces.
    """
    try:
        q, m = CLASSIC_SCHEMES[name]
    except KeyError:
        raise DomainError("name", name, f"one of {sorted(CLASSIC_SCHEMES)}") from None
    return regular(q, m, radius, declare_faces=True)


def generate(scheme: Scheme) -> LineComplex:
    """Build the complex described by a scheme record."""
    if isinstance(scheme, RegularScheme):
        return regular(scheme.q, scheme.m, scheme.radius, scheme.declare_faces)
    if isinstance(scheme, ClosedScheme):
        return closed(scheme.n, scheme.q)
    if isinstance(scheme, ClassicScheme):
        return classic(scheme.name, scheme.radius)
    raise TypeError(f"Unsupported scheme: {scheme!r}")


def parse_scheme_m(text: str) -> Tuple[HalfPerimeter, ...]:
    """Parse a comma separated half-perimeter list such as ``"2,2,inf"``."""
    return tuple(parse_half_perimeter(token.strip()) for token in text.split(",") if token)

