"""
Combinatorics of finite unions of triangles.

For a simply connected union D of f triangles with e₀ boundary edges and v′ interior
vertices, Euler's formula gives e₀ = f − 2v′ + 2. Under (M1) and (M2) the number of
triangles is bounded by (6M²/ε)·e₀.
"""

import dataclasses
import math
from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Set

import networkx as nx

from conformal_type_lab.errors import MissingCluster, NotSimplyConnected
from conformal_type_lab.tiling.theorems import TilingChecker
from conformal_type_lab.tiling.tiling import SideKey, Tiling
from conformal_type_lab.utils import sorted_ids


@dataclasses.dataclass(frozen=True)
class EulerIdentity:
    e0: int  # Boundary edges of D
    f: int  # Triangles in D
    v_interior: int  # Vertices of D not on its boundary
    residual: int  # e0 − (f − 2 v_interior + 2)


@dataclasses.dataclass(frozen=True)
class CombinatorialReport:
    e0: int
    f: int
    bound: Fraction  # (6M²/ε)·e0
    holds: bool  # f <= bound
    precondition_met: bool  # (M1) and (M2) hold on the ambient clusters


def _side_counts(tiling: Tiling, triangle_ids: Iterable[str]) -> Counter:
    counts: Counter = Counter()
    for tid in triangle_ids:
        counts.update(tiling.triangle(tid).sides)
    return counts


def boundary_sides(tiling: Tiling, triangle_ids: Iterable[str]) -> List[SideKey]:
    """Sides of the union used by exactly one of its triangles."""
    return [side for side, count in _side_counts(tiling, triangle_ids).items() if count == 1]


def _boundary_is_simple_cycle(boundary: List[SideKey]) -> bool:
    graph = nx.Graph()
    graph.add_edges_from(tuple(side) for side in boundary)
    return (
        graph.number_of_edges() == len(boundary)
        and all(degree == 2 for _, degree in graph.degree())
        and nx.is_connected(graph)
    )


def euler_boundary_identity(tiling: Tiling, triangle_ids: Iterable[str]) -> EulerIdentity:
    """Count e₀, f and v′ of the union D and evaluate e₀ − (f − 2v′ + 2).

    D is accepted as simply connected when its triangles are connected through shared
    sides, its Euler characteristic V − E + F is 1 and its boundary is one simple cycle.

    Raises:
        NotSimplyConnected: If any of these checks fails, or D is empty.
        UnknownTriangle: If an id is not a triangle of the tiling.
    """
    members = sorted_ids(set(triangle_ids))
    if not members:
        raise NotSimplyConnected("the union is empty")
    for tid in members:
        tiling.triangle(tid)
    if not nx.is_connected(tiling.adjacency_graph().subgraph(members)):
        raise NotSimplyConnected("the triangles are not connected through shared sides")

    counts = _side_counts(tiling, members)
    if any(count > 2 for count in counts.values()):
        raise NotSimplyConnected("a side is shared by more than two triangles")
    boundary = [side for side, count in counts.items() if count == 1]
    vertices: Set[str] = {v for tid in members for v in tiling.triangle(tid).vertices}
    euler_characteristic = len(vertices) - len(counts) + len(members)
    if euler_characteristic != 1:
        raise NotSimplyConnected(f"Euler characteristic is {euler_characteristic}, not 1")
    if not _boundary_is_simple_cycle(boundary):
        raise NotSimplyConnected("the boundary is not a single simple cycle")

    on_boundary: Set[str] = {v for side in boundary for v in side}
    e0, f = len(boundary), len(members)
    v_interior = len(vertices - on_boundary)
    residual = e0 - (f - 2 * v_interior + 2)
    return EulerIdentity(e0=e0, f=f, v_interior=v_interior, residual=residual)


def boundary_walk_length(tiling: Tiling, triangle_ids: Iterable[str]) -> int:
    """Number of steps to walk once around the boundary of the union.

    Used as an independent recount of e₀: the walk follows boundary sides from vertex to
    vertex until it returns to its start.
    """
    boundary = boundary_sides(tiling, triangle_ids)
    if not boundary:
        return 0
    links: Dict[str, List[str]] = defaultdict(list)
    for side in boundary:
        a, b = sorted_ids(side)
        links[a].append(b)
        links[b].append(a)
    start = sorted_ids(links)[0]
    previous, current = start, sorted_ids(links[start])[0]
    steps = 1
    while current != start and steps <= len(boundary):
        following = next((n for n in sorted_ids(links[current]) if n != previous), previous)
        previous, current = current, following
        steps += 1
    return steps


def _ambient_conditions_hold(tiling: Tiling, eps: Fraction, M: int) -> bool:
    """(M1) and (M2) on the stored clusters of the tiling."""
    if not tiling.clusters:
        return False
    checker = TilingChecker(tiling)
    try:
        clusters = checker.cluster_assignment()
    except MissingCluster:
        return False
    bound = -float(eps) * math.pi
    for cluster_id, members in clusters:
        record = checker.check_cluster(cluster_id, members, 0.0, M, bound, "M2")
        if "M1" in record.violations or "M2" in record.violations:
            return False
    return True


def comb_isoperimetric_check(tiling: Tiling, triangle_ids: Iterable[str], eps,
                             M: int) -> CombinatorialReport:
    """Report f, e₀ and whether f <= (6M²/ε)·e₀ for the union D.

    The bound is guaranteed only when (M1) and (M2) hold on the ambient cluster
    assignment; ``precondition_met`` records whether they do. Exact rationals are used
    for the bound.
    """
    members = sorted_ids(set(triangle_ids))
    eps = Fraction(eps)
    e0 = len(boundary_sides(tiling, members))
    f = len(members)
    bound = Fraction(6 * M * M) / eps * e0
    return CombinatorialReport(
        e0=e0,
        f=f,
        bound=bound,
        holds=f <= bound,
        precondition_met=_ambient_conditions_hold(tiling, eps, M),
    )
