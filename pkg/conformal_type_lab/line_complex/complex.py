"""
Line complexes (Speiser graphs) of degree q.

A line complex is a connected bipartite graph whose vertices are circle vertices
(``o``) and cross vertices (``x``), with every vertex carrying exactly one edge per label
1..q. The rotation system is never stored: labels run counterclockwise around circle
vertices and clockwise around cross vertices. Finite truncations of infinite complexes mark
the half-edges that leave the truncation as ``frontier`` entries.
"""

import dataclasses
import math
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from conformal_type_lab.errors import UnknownVertex
from conformal_type_lab.utils import natural_key, sorted_ids

CIRCLE = "o"
CROSS = "x"
PARITIES = (CIRCLE, CROSS)

HalfPerimeter = Union[int, float]


@dataclasses.dataclass(frozen=True)
class Edge:
    """An edge joining a circle vertex and a cross vertex, carrying one label in 1..q."""

    circle: str
    cross: str
    label: int

    @property
    def id(self) -> str:
        return f"{self.circle}:{self.label}"

    def other(self, vertex_id: str) -> str:
        return self.cross if vertex_id == self.circle else self.circle


@dataclasses.dataclass(frozen=True)
class FaceDeclaration:
    """The half-perimeter of the face of label pair (j, j+1) at a vertex.

    Declarations resolve faces whose boundary walk leaves a finite truncation.
    """

    vertex: str
    j: int
    m: HalfPerimeter


@dataclasses.dataclass(frozen=True)
class Diagnostic:
    """A violated property of a complex, with a witness vertex or edge id."""

    property: str
    message: str
    witness: str

    def __str__(self) -> str:
        return f"[{self.property}] {self.message} (witness: {self.witness})"


class LineComplex:
    """Immutable labelled bipartite graph with optional frontier and face declarations.

    Construction never rejects malformed data; ``validate`` reports what is wrong with it.

    Args:
        q (int): The degree (number of labels).
        vertices (Mapping[str, str]): Vertex id to parity (``"o"`` or ``"x"``).
        edges (Iterable[Edge]): The labelled edges.
        frontier (Iterable[Tuple[str, int]]): Unresolved half-edges (vertex id, label).
        declarations (Iterable[FaceDeclaration]): Declared half-perimeters of faces that
            leave the truncation.
    """

    def __init__(
        self,
        q: int,
        vertices: Mapping[str, str],
        edges: Iterable[Edge],
        frontier: Iterable[Tuple[str, int]] = (),
        declarations: Iterable[FaceDeclaration] = (),
    ):
        self.q = int(q)
        self._vertices: Dict[str, str] = {
            vertex_id: vertices[vertex_id] for vertex_id in sorted_ids(vertices)
        }
        self.edges: Tuple[Edge, ...] = tuple(
            sorted(
                set(edges),
                key=lambda e: (natural_key(e.circle), e.label, natural_key(e.cross)),
            )
        )
        self.frontier: FrozenSet[Tuple[str, int]] = frozenset(
            (vertex_id, int(label)) for vertex_id, label in frontier
        )
        self.declarations: Tuple[FaceDeclaration, ...] = tuple(
            sorted(set(declarations), key=lambda d: (natural_key(d.vertex), d.j))
        )

        self._incidence: Dict[str, Dict[int, List[Edge]]] = defaultdict(
            lambda: defaultdict(list)
        )
        for edge in self.edges:
            self._incidence[edge.circle][edge.label].append(edge)
            if edge.cross != edge.circle:
                self._incidence[edge.cross][edge.label].append(edge)

        self._multigraph: Optional[nx.MultiGraph] = None
        self._graph: Optional[nx.Graph] = None
        self._faces = None

    # ------------------------------------------------------------------
    # Lookups
    # ------------------------------------------------------------------
    @property
    def vertices(self) -> Mapping[str, str]:
        return dict(self._vertices)

    @property
    def vertex_ids(self) -> List[str]:
        return list(self._vertices)

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def parity(self, vertex_id: str) -> str:
        try:
            return self._vertices[vertex_id]
        except KeyError:
            raise UnknownVertex(vertex_id) from None

    def require(self, vertex_id: str) -> str:
        """Return ``vertex_id`` if it is a vertex of the complex, else raise UnknownVertex."""
        if vertex_id not in self._vertices:
            raise UnknownVertex(vertex_id)
        return vertex_id

    def edges_at(self, vertex_id: str, label: int) -> List[Edge]:
        return list(self._incidence.get(vertex_id, {}).get(label, ()))

    def edge_at(self, vertex_id: str, label: int) -> Optional[Edge]:
        """The unique edge with ``label`` at ``vertex_id`` (None on the frontier)."""
        candidates = self._incidence.get(vertex_id, {}).get(label, ())
        return candidates[0] if len(candidates) == 1 else None

    def neighbor(self, vertex_id: str, label: int) -> Optional[str]:
        edge = self.edge_at(vertex_id, label)
        return None if edge is None else edge.other(vertex_id)

    def is_frontier(self, vertex_id: str, label: int) -> bool:
        return (vertex_id, label) in self.frontier

    @property
    def frontier_vertices(self) -> FrozenSet[str]:
        return frozenset(vertex_id for vertex_id, _ in self.frontier)

    @property
    def is_closed(self) -> bool:
        return not self.frontier

    def next_label(self, j: int) -> int:
        """Cyclic successor of label j in 1..q."""
        return j % self.q + 1

    def declaration_map(self) -> Dict[Tuple[str, int], HalfPerimeter]:
        return {(d.vertex, d.j): d.m for d in self.declarations}

    # ------------------------------------------------------------------
    # Derived structures
    # ------------------------------------------------------------------
    def to_networkx(self) -> nx.MultiGraph:
        """The complex as a networkx MultiGraph keyed by edge id."""
        if self._multigraph is None:
            graph = nx.MultiGraph()
            for vertex_id, parity in self._vertices.items():
                graph.add_node(vertex_id, parity=parity)
            for edge in self.edges:
                graph.add_edge(edge.circle, edge.cross, key=edge.id, label=edge.label)
            self._multigraph = graph
        return self._multigraph

    def simple_graph(self) -> nx.Graph:
        """Underlying simple graph (multi-edges collapsed), used for distances and splits."""
        if self._graph is None:
            self._graph = nx.Graph(self.to_networkx())
        return self._graph

    def faces(self):
        """The traced face set, computed once per complex."""
        if self._faces is None:
            from conformal_type_lab.line_complex.faces import trace_faces
            self._faces = trace_faces(self)
        return self._faces

    # ------------------------------------------------------------------
    # Builders
    # ------------------------------------------------------------------
    def with_declarations(self, declarations: Iterable[FaceDeclaration]) -> 'LineComplex':
        return LineComplex(
            self.q, self._vertices, self.edges, self.frontier,
            tuple(self.declarations) + tuple(declarations),
        )

    def relabeled(self, mapping: Mapping[str, str]) -> 'LineComplex':
        """Copy of the complex with vertex ids renamed through ``mapping``."""
        return LineComplex(
            self.q,
            {mapping[v]: parity for v, parity in self._vertices.items()},
            [Edge(mapping[e.circle], mapping[e.cross], e.label) for e in self.edges],
            [(mapping[v], label) for v, label in self.frontier],
            [FaceDeclaration(mapping[d.vertex], d.j, d.m) for d in self.declarations],
        )

    def _key(self):
        return (
            self.q,
            tuple(self._vertices.items()),
            self.edges,
            tuple(sorted(self.frontier, key=lambda item: (natural_key(item[0]), item[1]))),
            tuple((d.vertex, d.j, _m_key(d.m)) for d in self.declarations),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LineComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"LineComplex(q={self.q}, vertices={len(self._vertices)}, "
            f"edges={len(self.edges)}, frontier={len(self.frontier)})"
        )


def _m_key(m: HalfPerimeter) -> str:
    return "inf" if math.isinf(m) else str(int(m))
