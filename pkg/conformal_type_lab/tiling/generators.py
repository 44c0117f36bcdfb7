"""
Generators for tilings used as test corpora and CLI inputs.

``regular_triangle_patch`` cuts a patch out of the regular triangulation with p triangles
at every vertex. The triangulation is the chamber system of the triangle group generated by
reflections r0, r1, r2 with relators (r0 r1)³, (r1 r2)^p and (r0 r2)², enumerated with the
same :class:`CosetTable` as line complexes: a tile is an orbit of ⟨r0, r1⟩ (six chambers),
a vertex an orbit of ⟨r1, r2⟩ and tiles sharing a side are joined by r2.
"""

import math
import time
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError
from conformal_type_lab.line_complex.coset_table import CosetTable
from conformal_type_lab.tiling.combinatorics import boundary_sides
from conformal_type_lab.tiling.tiling import Tiling, Triangle
from conformal_type_lab.utils import create_logger, sorted_ids

R0, R1, R2 = 0, 1, 2


def equilateral_side(angle: float) -> Tuple[float, float]:
    """(k, side length) of the equilateral model triangle with corner ``angle``.

    The plane (k = 0, unit sides) when 3·angle = π, the unit sphere when it exceeds π and
    the hyperbolic plane of curvature −1 otherwise.
    """
    if not 0 < angle < math.pi:
        raise DomainError("angle", angle, "(0, pi)")
    excess = 3 * angle - math.pi
    if abs(excess) <= config.tolerance:
        return 0.0, 1.0
    ratio = math.cos(angle) / (1 - math.cos(angle))
    if excess > 0:
        return 1.0, math.acos(max(-1.0, min(1.0, ratio)))
    return -1.0, math.acosh(ratio)


class TrianglePatchBuilder:
    """Builds patches of the regular triangulation {3, p}.

    Args:
        p (int): Triangles per vertex, at least 3.
        radius (int): Tile distance (through shared sides) from the base tile.
        corner_angle (Optional[float]): Corner angle of every tile; 2π/p by default, so that
            every total angle is 2π. Other values give cone points of total angle p·angle.
    """

    def __init__(self, p: int, radius: int, corner_angle: Optional[float] = None):
        if p < 3:
            raise DomainError("p", p, "integers >= 3")
        if radius < 0:
            raise DomainError("radius", radius, "integers >= 0")
        self.p = p
        self.radius = radius
        self.corner_angle = 2 * math.pi / p if corner_angle is None else corner_angle
        self.k, self.side = equilateral_side(self.corner_angle)
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )

    def relators(self) -> List[List[int]]:
        return [[R0, R1] * 3, [R1, R2] * self.p, [R0, R2] * 2]

    def build(self) -> Tiling:
        start_time = time.time()
        table = CosetTable(3, self.relators())
        table.enumerate(3 * self.radius + 4 + 2 * self.p)

        tiles = self._tile_ball(table)
        vertex_of = self._vertex_classes(table)
        triangles, total_angles = self._to_triangles(table, tiles, vertex_of)
        tiling = Tiling(total_angles, triangles).singleton_clusters()

        self.logger.info(
            f"Built {{3,{self.p}}} patch r={self.radius}: {len(tiling)} triangles, "
            f"{len(total_angles)} vertices in {time.time() - start_time:.3f} seconds"
        )
        return tiling

    @staticmethod
    def _orbit(table: CosetTable, c: int, generators: Sequence[int],
               length: int) -> Optional[List[int]]:
        """Chambers met by applying the generators alternately; None if one is undefined."""
        chambers = [c]
        current = c
        for step in range(length - 1):
            current = table.follow(current, generators[step % 2])
            if current is None:
                return None
            chambers.append(current)
        return chambers

    def _tile_ball(self, table: CosetTable) -> List[List[int]]:
        """Complete tiles within ``radius`` of the base tile, breadth first."""
        base = self._orbit(table, table.start, (R0, R1), 6)
        if base is None:
            raise DomainError("p", self.p, "triangle groups with an enumerable base tile")
        seen = {min(base)}
        tiles = [base]
        distances = [0]
        queue = deque([0])
        while queue:
            index = queue.popleft()
            if distances[index] == self.radius:
                continue
            for chamber in tiles[index]:
                across = table.follow(chamber, R2)
                if across is None:
                    continue
                tile = self._orbit(table, across, (R0, R1), 6)
                if tile is None or min(tile) in seen:
                    continue
                seen.add(min(tile))
                tiles.append(tile)
                distances.append(distances[index] + 1)
                queue.append(len(tiles) - 1)
        return tiles

    @staticmethod
    def _vertex_classes(table: CosetTable) -> Dict[int, int]:
        """Chamber to the smallest chamber of its ⟨r1, r2⟩ orbit."""
        graph = nx.Graph()
        for c in table.live_cosets():
            graph.add_node(c)
            for gen in (R1, R2):
                other = table.follow(c, gen)
                if other is not None:
                    graph.add_edge(c, other)
        return {c: min(component) for component in nx.connected_components(graph)
                for c in component}

    def _to_triangles(self, table: CosetTable, tiles: List[List[int]],
                      vertex_of: Dict[int, int]) -> Tuple[List[Triangle], Dict[str, float]]:
        names: Dict[int, str] = {}
        triangles = []
        for index, chambers in enumerate(tiles):
            # chambers[0], chambers[1] and chambers[3] lie at the three distinct corners
            corners = []
            for chamber in (chambers[0], chambers[1], chambers[3]):
                key = vertex_of[chamber]
                if key not in names:
                    names[key] = f"v{len(names)}"
                corners.append(names[key])
            triangles.append(Triangle(
                id=f"t{index}",
                vertices=tuple(corners),
                angles=(self.corner_angle,) * 3,
                lengths=(self.side,) * 3,
                k=self.k,
                omega=3 * self.corner_angle - math.pi,
            ))
        total = self.p * self.corner_angle
        return triangles, {name: total for name in names.values()}


def regular_triangle_patch(p: int, radius: int,
                           corner_angle: Optional[float] = None) -> Tiling:
    """Tiles within ``radius`` side-steps of a base tile in the triangulation {3, p}.

    With the default corner angle 2π/p the tiles are equilateral model triangles of the
    plane (p = 6), the unit sphere (p <= 5) or the hyperbolic plane (p >= 7), every total
    angle is 2π and K(Δ) = 6π/p − π. ``corner_angle`` = π/3 with p = 12 gives flat tiles
    around cone points of total angle 4π. Every tile is its own cluster.
    """
    return TrianglePatchBuilder(p, radius, corner_angle).build()


def random_simply_connected_union(tiling: Tiling, size: int,
                                  rng: np.random.Generator) -> List[str]:
    """Grow a random simply connected union of at most ``size`` tiles.

    A neighbouring tile is added only if it meets the union along one side with its third
    vertex outside the union, or along two or more sides; both keep the union a disk.
    """
    triangle_ids = tiling.triangle_ids
    if not triangle_ids or size < 1:
        return []
    union = [triangle_ids[int(rng.integers(len(triangle_ids)))]]
    members = set(union)
    while len(union) < size:
        union_vertices = {v for tid in union for v in tiling.triangle(tid).vertices}
        open_sides = set(boundary_sides(tiling, union))
        candidates = []
        for tid in sorted_ids({n for t in union for n in tiling.neighbors(t)} - members):
            triangle = tiling.triangle(tid)
            shared = [side for side in triangle.sides if side in open_sides]
            outside = [v for v in triangle.vertices if v not in union_vertices]
            if len(shared) >= 2 or (len(shared) == 1 and outside):
                candidates.append(tid)
        if not candidates:
            break
        chosen = candidates[int(rng.integers(len(candidates)))]
        union.append(chosen)
        members.add(chosen)
    return sorted_ids(union)
