"""
Triangle tilings of Aleksandrov surfaces.

A tiling stores, per vertex, the total angle T(v) (``math.inf`` for a vertex at infinity)
and, per triangle, its corner angles, side lengths, model curvature k, optional interior
curvature mass and the left turns of its sides. Adjacency is derived from shared sides.
"""

import dataclasses
from collections import defaultdict
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from conformal_type_lab.errors import UnknownTriangle, UnknownVertex
from conformal_type_lab.utils import natural_key, sorted_ids

SideKey = FrozenSet[str]


@dataclasses.dataclass(frozen=True)
class Triangle:
    """A tile with vertices v1, v2, v3.

    Attributes:
        id (str): Triangle id.
        vertices (Tuple[str, str, str]): Vertex ids v1, v2, v3.
        angles (Tuple[float, float, float]): Corner angles at v1, v2, v3 in radians.
        lengths (Tuple[float, float, float]): Side lengths |v1v2|, |v2v3|, |v3v1|.
        k (float): Curvature of the model triangle the tile compares with.
        omega (Optional[float]): Interior curvature mass; None when not supplied.
        turns (Tuple[float, float, float]): Left turns of the sides v1v2, v2v3, v3v1.
    """

    id: str
    vertices: Tuple[str, str, str]
    angles: Tuple[float, float, float]
    lengths: Tuple[float, float, float]
    k: float = 0.0
    omega: Optional[float] = None
    turns: Tuple[float, float, float] = (0.0, 0.0, 0.0)

    def angle_at(self, vertex_id: str) -> float:
        """θ(v, Δ); zero when v is not a vertex of the triangle."""
        return sum(
            angle for v, angle in zip(self.vertices, self.angles) if v == vertex_id
        )

    @property
    def sides(self) -> List[SideKey]:
        v1, v2, v3 = self.vertices
        return [frozenset((v1, v2)), frozenset((v2, v3)), frozenset((v3, v1))]

    @property
    def perimeter(self) -> float:
        return sum(self.lengths)

    @property
    def angle_sum(self) -> float:
        return sum(self.angles)

    def relabeled(self, vertex_map: Mapping[str, str], new_id: str) -> 'Triangle':
        return dataclasses.replace(
            self, id=new_id, vertices=tuple(vertex_map[v] for v in self.vertices))


class Tiling:
    """An immutable tiling with optional cluster assignment.

    Args:
        vertices (Mapping[str, float]): Vertex id to total angle T(v).
        triangles (Iterable[Triangle]): The tiles.
        clusters (Optional[Mapping[str, Iterable[str]]]): Cluster id to triangle ids.
    """

    def __init__(
        self,
        vertices: Mapping[str, float],
        triangles: Iterable[Triangle],
        clusters: Optional[Mapping[str, Iterable[str]]] = None,
    ):
        self._total_angles: Dict[str, float] = {
            vertex_id: float(vertices[vertex_id]) for vertex_id in sorted_ids(vertices)
        }
        self._triangles: Dict[str, Triangle] = {
            t.id: t for t in sorted(triangles, key=lambda t: natural_key(t.id))
        }
        self.clusters: Dict[str, Tuple[str, ...]] = {
            cid: tuple(sorted_ids(members))
            for cid, members in sorted((clusters or {}).items(), key=lambda i: natural_key(i[0]))
        }

        self._by_side: Dict[SideKey, List[str]] = defaultdict(list)
        self._by_vertex: Dict[str, List[str]] = defaultdict(list)
        for t in self._triangles.values():
            for side in t.sides:
                self._by_side[side].append(t.id)
            for v in set(t.vertices):
                self._by_vertex[v].append(t.id)
        self._graph: Optional[nx.Graph] = None

    @property
    def vertex_ids(self) -> List[str]:
        return list(self._total_angles)

    @property
    def triangle_ids(self) -> List[str]:
        return list(self._triangles)

    @property
    def triangles(self) -> List[Triangle]:
        return list(self._triangles.values())

    @property
    def total_angles(self) -> Dict[str, float]:
        return dict(self._total_angles)

    def __len__(self) -> int:
        return len(self._triangles)

    def __contains__(self, triangle_id: str) -> bool:
        return triangle_id in self._triangles

    def stored_total_angle(self, vertex_id: str) -> float:
        try:
            return self._total_angles[vertex_id]
        except KeyError:
            raise UnknownVertex(vertex_id) from None

    def triangle(self, triangle_id: str) -> Triangle:
        try:
            return self._triangles[triangle_id]
        except KeyError:
            raise UnknownTriangle(triangle_id) from None

    def incident(self, vertex_id: str) -> List[Triangle]:
        if vertex_id not in self._total_angles:
            raise UnknownVertex(vertex_id)
        return [self._triangles[tid] for tid in self._by_vertex.get(vertex_id, ())]

    def triangles_on_side(self, side: SideKey) -> List[str]:
        return list(self._by_side.get(side, ()))

    def sides(self) -> Dict[SideKey, List[str]]:
        return {side: list(ids) for side, ids in self._by_side.items()}

    def neighbors(self, triangle_id: str) -> List[str]:
        """Triangles sharing a side with the given one."""
        found = set()
        for side in self.triangle(triangle_id).sides:
            found.update(self._by_side[side])
        found.discard(triangle_id)
        return sorted_ids(found)

    def adjacency_graph(self) -> nx.Graph:
        """Triangles as nodes, an edge for every shared side (degree at most 3)."""
        if self._graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(self._triangles)
            for ids in self._by_side.values():
                for i, a in enumerate(ids):
                    for b in ids[i + 1:]:
                        graph.add_edge(a, b)
            self._graph = graph
        return self._graph

    def cluster_of(self) -> Dict[str, str]:
        """Triangle id to cluster id for every assigned triangle."""
        return {tid: cid for cid, members in self.clusters.items() for tid in members}

    def with_clusters(self, clusters: Mapping[str, Iterable[str]]) -> 'Tiling':
        return Tiling(self._total_angles, self._triangles.values(), clusters)

    def singleton_clusters(self) -> 'Tiling':
        return self.with_clusters({f"C{tid}": [tid] for tid in self._triangles})

    def subtiling(self, triangle_ids: Iterable[str]) -> 'Tiling':
        """The tiles ``triangle_ids`` with their vertices; total angles are kept."""
        chosen = [self.triangle(tid) for tid in triangle_ids]
        vertices = {v: self._total_angles[v] for t in chosen for v in t.vertices}
        return Tiling(vertices, chosen)

    def relabeled(self, vertex_map: Mapping[str, str],
                  triangle_map: Mapping[str, str]) -> 'Tiling':
        return Tiling(
            {vertex_map[v]: angle for v, angle in self._total_angles.items()},
            [t.relabeled(vertex_map, triangle_map[t.id]) for t in self._triangles.values()],
            {cid: [triangle_map[tid] for tid in members]
             for cid, members in self.clusters.items()},
        )

    def _key(self):
        return (
            tuple(self._total_angles.items()),
            tuple(self._triangles.values()),
            tuple(self.clusters.items()),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (
            f"Tiling(vertices={len(self._total_angles)}, triangles={len(self._triangles)}, "
            f"clusters={len(self.clusters)})"
        )
