"""
Connected subgraphs and partitions of a parent graph.

A handle stands for a connected vertex set of a parent graph whose vertex degree is at most
q (a line complex, or the triangle adjacency graph of a tiling with q = 3). Finite
truncations of infinite complexes carry ``open_vertices``: vertices standing in for the
infinite remainder of the surface. A handle that contains any of them is flagged infinite.
"""

from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from conformal_type_lab.errors import InvalidPartition, NotConnected, UnknownVertex
from conformal_type_lab.line_complex.complex import LineComplex
from conformal_type_lab.line_complex.excess import vertex_excess
from conformal_type_lab.utils import natural_key, sorted_ids


def unresolved_vertices(complex_: LineComplex) -> List[str]:
    return [v for v in complex_.vertex_ids if vertex_excess(complex_, v) is None]


class SubgraphHandle:
    """A connected set of parent vertices.

    Args:
        graph (nx.Graph): The parent graph.
        vertices (Iterable[str]): Member vertex ids.
        q (int): Degree bound of the parent graph.
        open_vertices (Iterable[str]): Parent vertices standing in for an infinite remainder.
        infinite (Optional[bool]): Explicit infinite flag; by default the handle is infinite
            iff it contains an open vertex.

    Raises:
        UnknownVertex: If a member is not a vertex of the parent graph.
        NotConnected: If the induced subgraph is empty or disconnected.
    """

    def __init__(
        self,
        graph: nx.Graph,
        vertices: Iterable[str],
        q: int,
        open_vertices: Iterable[str] = (),
        infinite: Optional[bool] = None,
    ):
        self.graph = graph
        self.vertices: FrozenSet[str] = frozenset(vertices)
        self.q = q
        self.open_vertices: FrozenSet[str] = frozenset(open_vertices)
        for vertex_id in self.vertices:
            if vertex_id not in graph:
                raise UnknownVertex(vertex_id)
        if not self.vertices or not nx.is_connected(graph.subgraph(self.vertices)):
            raise NotConnected(self.vertices)
        if infinite is None:
            infinite = bool(self.vertices & self.open_vertices)
        self.infinite = infinite

    @classmethod
    def from_complex(cls, complex_: LineComplex, vertices: Optional[Iterable[str]] = None,
                     open_vertices: Optional[Iterable[str]] = None) -> 'SubgraphHandle':
        """Handle on a line complex; vertices with unresolved excess are the open vertices."""
        if open_vertices is None:
            open_vertices = unresolved_vertices(complex_)
        members = complex_.vertex_ids if vertices is None else vertices
        return cls(complex_.simple_graph(), members, complex_.q, open_vertices)

    def child(self, vertices: Iterable[str], infinite: bool = False) -> 'SubgraphHandle':
        return SubgraphHandle(self.graph, vertices, self.q, self.open_vertices, infinite)

    @property
    def size(self) -> int:
        """#(Λ): the number of member vertices."""
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted_vertices())

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self.vertices

    def sorted_vertices(self) -> List[str]:
        return sorted_ids(self.vertices)

    def smallest(self) -> str:
        return min(self.vertices, key=natural_key)

    def components_without(self, removed: Iterable[str]) -> List[FrozenSet[str]]:
        """Components of the handle minus ``removed``, ordered by smallest member id."""
        rest = self.vertices - frozenset(removed)
        components = [frozenset(c) for c in nx.connected_components(self.graph.subgraph(rest))]
        return sorted(components, key=lambda c: natural_key(min(c, key=natural_key)))

    def frontier_of(self, grown: FrozenSet[str]) -> List[str]:
        """Members outside ``grown`` adjacent to it, smallest id first."""
        boundary = {
            n for v in grown for n in self.graph.neighbors(v)
            if n in self.vertices and n not in grown
        }
        return sorted_ids(boundary)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgraphHandle):
            return NotImplemented
        return self.vertices == other.vertices and self.infinite == other.infinite

    def __hash__(self) -> int:
        return hash((self.vertices, self.infinite))

    def __repr__(self) -> str:
        flag = ", infinite" if self.infinite else ""
        return f"SubgraphHandle(size={self.size}, smallest={self.smallest()!r}{flag})"


class GraphPartition:
    """Disjoint connected pieces with ids.

    Args:
        pieces (Sequence[SubgraphHandle]): The pieces.
        ids (Optional[Sequence[str]]): Piece ids; ``P1``, ``P2``, ... by default.

    Raises:
        InvalidPartition: If ids repeat or pieces overlap.
    """

    def __init__(self, pieces: Sequence[SubgraphHandle], ids: Optional[Sequence[str]] = None):
        if ids is None:
            ids = [f"P{i}" for i in range(1, len(pieces) + 1)]
        if len(ids) != len(pieces):
            raise InvalidPartition(f"{len(ids)} ids for {len(pieces)} pieces")
        if len(set(ids)) != len(ids):
            raise InvalidPartition("piece ids repeat")
        self._pieces: Dict[str, SubgraphHandle] = dict(zip(ids, pieces))

        owner: Dict[str, str] = {}
        for piece_id, piece in self._pieces.items():
            for vertex_id in piece.vertices:
                if vertex_id in owner:
                    raise InvalidPartition(
                        f"vertex {vertex_id!r} lies in pieces {owner[vertex_id]} and {piece_id}"
                    )
                owner[vertex_id] = piece_id
        self._owner = owner

    @classmethod
    def from_vertex_lists(cls, complex_: LineComplex,
                          pieces: Sequence[Tuple[str, Sequence[str]]]) -> 'GraphPartition':
        """Build from ``(piece id, vertex ids)`` pairs, e.g. a parsed ``.gpt`` file."""
        unresolved = unresolved_vertices(complex_)
        handles = [
            SubgraphHandle.from_complex(complex_, members, unresolved) for _, members in pieces
        ]
        return cls(handles, [piece_id for piece_id, _ in pieces])

    @classmethod
    def singletons(cls, complex_: LineComplex) -> 'GraphPartition':
        return cls.from_vertex_lists(complex_, [(v, [v]) for v in complex_.vertex_ids])

    def items(self) -> List[Tuple[str, SubgraphHandle]]:
        return list(self._pieces.items())

    @property
    def ids(self) -> List[str]:
        return list(self._pieces)

    @property
    def pieces(self) -> List[SubgraphHandle]:
        return list(self._pieces.values())

    def __len__(self) -> int:
        return len(self._pieces)

    def __getitem__(self, piece_id: str) -> SubgraphHandle:
        return self._pieces[piece_id]

    def piece_of(self, vertex_id: str) -> Optional[str]:
        return self._owner.get(vertex_id)

    def covered(self) -> FrozenSet[str]:
        return frozenset(self._owner)

    def check_cover(self, vertices: Iterable[str]) -> None:
        """Raise InvalidPartition unless the pieces cover exactly ``vertices``."""
        expected = frozenset(vertices)
        missing = expected - self.covered()
        extra = self.covered() - expected
        if missing:
            raise InvalidPartition(f"vertex {sorted_ids(missing)[0]!r} is in no piece")
        if extra:
            raise InvalidPartition(f"vertex {sorted_ids(extra)[0]!r} is not part of the graph")
