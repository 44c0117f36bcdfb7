"""
Condition checkers for the hyperbolicity criteria on tilings.

``check_theorem_T`` checks a cluster assignment: (M1) #(C) <= M, (M2) Σ K(Δ) <= −επ over
each cluster, (R1) every corner angle >= ε and (R2) perimeter <= (2π − ε)·k^(−1/2) for
tiles compared with k > 0. ``check_final_tiling_theorem`` builds its own clusters from the
degree-3 triangle adjacency graph and checks Σ K(Δ) <= −ε per cluster.
``check_corollary_conditions`` derives (M1) and (M2) with M = 1 for spherical tilings of
bounded circumradius and large total angles.
"""

import math
import time
from multiprocessing.pool import ThreadPool
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from conformal_type_lab.certificates import (
    HYPERBOLIC, METRIC_ISOPERIMETRIC_ANNOTATION, PIECE_OK, PIECE_VIOLATED, VIOLATED,
    Certificate, PieceRecord,)
from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, MissingCluster, PreconditionFailed
from conformal_type_lab.partitioner.splitting import partition_lemma_par2
from conformal_type_lab.partitioner.subgraph import SubgraphHandle
from conformal_type_lab.spherical.corollary import corollary_area_and_curvature
from conformal_type_lab.spherical.geometry import ModelTriangle
from conformal_type_lab.tiling.curvature import angular_curvature
from conformal_type_lab.tiling.ledger import constant_ledger
from conformal_type_lab.tiling.tiling import Tiling, Triangle
from conformal_type_lab.utils import create_logger, natural_key, sorted_ids

CURVATURE_SUM_KEY = "curvature_sum"

CONDITION_DETAILS = {
    "M1": "#(C) <= M",
    "M2": "sum of K over the cluster <= -eps pi",
    "M2-final": "sum of K over the cluster <= -eps",
    "R1": "every corner angle >= eps",
    "R2": "perimeter <= (2 pi - eps) k^(-1/2) when k > 0",
    "partition": "the cluster has connected interior",
}


def _positive(name: str, value: float) -> float:
    if not value > 0:
        raise DomainError(name, value, "reals > 0")
    return float(value)


class TilingChecker:
    """Evaluates curvature and the per-tile regularity conditions of one tiling.

    Args:
        tiling (Tiling): The tiling to check.

    Raises:
        PreconditionFailed: If some tile has an infinite model curvature k(Δ).
    """

    def __init__(self, tiling: Tiling):
        self.tiling = tiling
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )
        for triangle in tiling.triangles:
            if not math.isfinite(triangle.k):
                raise PreconditionFailed(f"k(Delta) < infinity for triangle {triangle.id!r}")
        self._curvatures: Optional[Dict[str, float]] = None

    @property
    def curvatures(self) -> Dict[str, float]:
        """K(Δ) per triangle id."""
        if self._curvatures is None:
            self._curvatures = {
                tid: angular_curvature(self.tiling, tid) for tid in self.tiling.triangle_ids
            }
        return self._curvatures

    def regularity_violations(self, triangle: Triangle, eps: float) -> List[str]:
        """The conditions among R1 and R2 that the tile fails."""
        tolerance = config.tolerance
        failed = []
        if min(triangle.angles) < eps - tolerance:
            failed.append("R1")
        if triangle.k > 0 and \
                triangle.perimeter > (2 * math.pi - eps) / math.sqrt(triangle.k) + tolerance:
            failed.append("R2")
        return failed

    def has_metric_side_bounds(self, eps: float, M: int) -> bool:
        """Side lengths >= ε for k > 0, and ε <= side <= M for k <= 0."""
        tolerance = config.tolerance
        for triangle in self.tiling.triangles:
            if min(triangle.lengths) < eps - tolerance:
                return False
            if triangle.k <= 0 and max(triangle.lengths) > M + tolerance:
                return False
        return True

    def is_connected_cluster(self, members: Sequence[str]) -> bool:
        graph = self.tiling.adjacency_graph()
        return bool(members) and nx.is_connected(graph.subgraph(members))

    def check_cluster(self, cluster_id: str, members: Sequence[str], eps: float,
                      size_bound: int, curvature_bound: float,
                      sum_condition: str) -> PieceRecord:
        """Check one cluster against #(C) <= size_bound and Σ K <= curvature_bound."""
        tolerance = config.tolerance
        members = sorted_ids(members)
        total = math.fsum(self.curvatures[tid] for tid in members)
        violations = []
        if len(members) > size_bound:
            violations.append("M1")
        if total > curvature_bound + tolerance:
            violations.append(sum_condition)
        for tid in members:
            for condition in self.regularity_violations(self.tiling.triangle(tid), eps):
                if condition not in violations:
                    violations.append(condition)
        if not self.is_connected_cluster(members):
            violations.append("partition")
        status = PIECE_VIOLATED if violations else PIECE_OK
        return PieceRecord(cluster_id, members, len(members), total, status, violations)

    def _witness(self, record: PieceRecord, eps: float, size_bound: int,
                 curvature_bound: float) -> Dict[str, Any]:
        condition = record.violations[0]
        witness: Dict[str, Any] = {
            "condition": condition,
            "piece": record.id,
            "hypothesis": CONDITION_DETAILS[condition],
            "size": record.size,
            CURVATURE_SUM_KEY: record.total,
        }
        if condition in ("R1", "R2"):
            offending = next(
                tid for tid in record.ids
                if condition in self.regularity_violations(self.tiling.triangle(tid), eps)
            )
            triangle = self.tiling.triangle(offending)
            witness["triangle"] = offending
            if condition == "R1":
                witness["detail"] = f"smallest angle {min(triangle.angles):.12g} < eps = {eps}"
            else:
                witness["detail"] = (
                    f"perimeter {triangle.perimeter:.12g} > "
                    f"(2 pi - eps) k^(-1/2) with k = {triangle.k}"
                )
        elif condition == "M1":
            witness["detail"] = f"#(C) = {record.size} > {size_bound}"
        elif condition == "partition":
            witness["detail"] = "the cluster's triangles are not connected through sides"
        else:
            witness["detail"] = (
                f"curvature sum {record.total:.12g} > {curvature_bound:.12g}"
            )
        return witness

    def cluster_assignment(self) -> List[Tuple[str, List[str]]]:
        """(cluster id, triangle ids) pairs covering every triangle exactly once.

        Raises:
            MissingCluster: If a triangle is in no cluster, or in more than one.
            UnknownTriangle: If a cluster names a triangle that is not in the tiling.
        """
        owner: Dict[str, str] = {}
        for cluster_id, members in self.tiling.clusters.items():
            for tid in members:
                self.tiling.triangle(tid)
                if tid in owner:
                    raise MissingCluster(
                        tid, f"is in clusters {owner[tid]!r} and {cluster_id!r}")
                owner[tid] = cluster_id
        for tid in self.tiling.triangle_ids:
            if tid not in owner:
                raise MissingCluster(tid)
        return [(cid, list(members)) for cid, members in self.tiling.clusters.items()]

    def check_theorem_T(self, eps: float, M: int, parallel: bool = False) -> Certificate:
        eps = _positive("eps", eps)
        if M < 1:
            raise DomainError("M", M, "integers >= 1")
        start_time = time.time()
        clusters = self.cluster_assignment()
        curvature_bound = -eps * math.pi

        def check(item: Tuple[str, List[str]]) -> PieceRecord:
            cluster_id, members = item
            return self.check_cluster(cluster_id, members, eps, M, curvature_bound, "M2")

        if parallel and len(clusters) > 1:
            workers = config.get_partitioner_settings()["parallel_workers"]
            with ThreadPool(workers) as pool:
                records = pool.map(check, clusters)
        else:
            records = [check(item) for item in clusters]
        records.sort(key=lambda record: natural_key(record.id))

        violated = [record for record in records if record.status == PIECE_VIOLATED]
        certificate = Certificate(
            verdict=VIOLATED if violated else HYPERBOLIC,
            theorem="T",
            eps=eps,
            M=M,
            pieces=records,
            witness=(
                self._witness(violated[0], eps, M, curvature_bound) if violated else None
            ),
            sum_key=CURVATURE_SUM_KEY,
        )
        if eps < math.pi:
            k_max = max((t.k for t in self.tiling.triangles), default=0.0)
            certificate.ledger = constant_ledger(eps, M, k_max).to_dict()
        if certificate.is_hyperbolic:
            if self.has_metric_side_bounds(eps, M):
                certificate.annotation = METRIC_ISOPERIMETRIC_ANNOTATION
            else:
                certificate.notes.append(
                    "side lengths are not bounded below by eps (or above by M for k <= 0); "
                    "no Gromov hyperbolicity remark"
                )
        self.logger.info(
            f"Theorem T check on {len(records)} clusters: {certificate.verdict} "
            f"in {time.time() - start_time:.3f} seconds"
        )
        return certificate

    def final_clusters(self, M: int) -> List[Tuple[List[str], bool]]:
        """Connected clusters covering the tiling, with a flag for components smaller than M.

        Each component of the adjacency graph with at least M triangles is partitioned into
        pieces of size in [M, 6M²]; a smaller component is kept whole.
        """
        graph = self.tiling.adjacency_graph()
        components = sorted(
            (sorted_ids(c) for c in nx.connected_components(graph)),
            key=lambda c: natural_key(c[0]),
        )
        clusters: List[Tuple[List[str], bool]] = []
        for component in components:
            if len(component) < M:
                clusters.append((component, True))
            elif M == 1:
                clusters.extend(([tid], False) for tid in component)
            else:
                handle = SubgraphHandle(graph, component, 3)
                for piece in partition_lemma_par2(handle, M):
                    clusters.append((piece.sorted_vertices(), False))
        return clusters

    def check_final_tiling_theorem(self, eps: float, M: int) -> Certificate:
        eps = _positive("eps", eps)
        if M < 1:
            raise DomainError("M", M, "integers >= 1")
        start_time = time.time()
        size_bound = 6 * M * M
        records = []
        fallbacks = []
        for index, (members, fallback) in enumerate(self.final_clusters(M), start=1):
            cluster_id = f"F{index}"
            records.append(
                self.check_cluster(cluster_id, members, eps, size_bound, -eps, "M2-final"))
            if fallback:
                fallbacks.append(cluster_id)

        violated = [record for record in records if record.status == PIECE_VIOLATED]
        certificate = Certificate(
            verdict=VIOLATED if violated else HYPERBOLIC,
            theorem="final-tiling",
            eps=eps,
            M=M,
            q=3,
            pieces=records,
            witness=self._witness(violated[0], eps, size_bound, -eps) if violated else None,
            sum_key=CURVATURE_SUM_KEY,
            notes=[
                f"clusters built on the triangle adjacency graph (degree 3), "
                f"each of size <= 6M^2 = {size_bound}"
            ],
        )
        if fallbacks:
            certificate.notes.append(
                f"components with fewer than M triangles checked as single clusters: "
                f"{', '.join(fallbacks)}"
            )
        self.logger.info(
            f"Final tiling check on {len(records)} clusters: {certificate.verdict} "
            f"in {time.time() - start_time:.3f} seconds"
        )
        return certificate


def check_theorem_T(tiling: Tiling, eps: float, M: int, parallel: bool = False) -> Certificate:
    """Check (M1), (M2), (R1) and (R2) on the clusters of ``tiling``.

    Each cluster additionally needs connected interior (condition ``partition``). A
    hyperbolic certificate carries the constant ledger when ε < π, and the Gromov
    hyperbolicity annotation when every side is at least ε (and at most M for k <= 0).

    Args:
        tiling (Tiling): A tiling with every triangle assigned to exactly one cluster.
        eps (float): ε > 0.
        M (int): Cluster size bound, at least 1.
        parallel (bool): Check clusters on a thread pool.

    Raises:
        DomainError: If ε <= 0 or M < 1.
        MissingCluster: If a triangle is unassigned or assigned twice.
        PreconditionFailed: If some k(Δ) is infinite.
    """
    return TilingChecker(tiling).check_theorem_T(eps, M, parallel)


def check_final_tiling_theorem(tiling: Tiling, eps: float, M: int) -> Certificate:
    """Check Σ K(Δ) <= −ε, (R1) and (R2) over clusters of size in [M, 6M²].

    Clusters come from partitioning the triangle adjacency graph with q = 3; any cluster
    assignment stored on the tiling is ignored.

    Raises:
        DomainError: If ε <= 0 or M < 1.
        PreconditionFailed: If some k(Δ) is infinite.
    """
    return TilingChecker(tiling).check_final_tiling_theorem(eps, M)


def check_corollary_conditions(tiling: Tiling, q: float, eps: float) -> Certificate:
    """Certify a spherical tiling of bounded circumradius through Theorem T with M = 1.

    Every tile must be spherical with circumradius <= R_{q,ε} after normalizing k to 1, and
    every finite total angle must be at least 2πq. Then K(Δ) <= −η/q for every tile, and
    Theorem T is checked on singleton clusters with ε' = min(ε, η/(qπ)).

    Raises:
        PreconditionFailed: If a tile is not spherical, is too large, or a total angle is
            below 2πq.
        DomainError: If q or ε is out of range.
    """
    eps = _positive("eps", eps)
    tolerance = config.tolerance
    for vertex_id, total in tiling.total_angles.items():
        if math.isfinite(total) and total < 2 * math.pi * q - tolerance:
            raise PreconditionFailed(f"T({vertex_id}) = {total:.12g} >= 2 pi q")

    bound = None
    for index, triangle in enumerate(tiling.triangles):
        if triangle.k <= 0:
            raise PreconditionFailed(f"triangle {triangle.id!r} is spherical (k > 0)")
        model = ModelTriangle.from_sides(*triangle.lengths, triangle.k)
        try:
            bound = corollary_area_and_curvature(
                q, eps, model, samples=None if index == 0 else 0)
        except PreconditionFailed as e:
            raise PreconditionFailed(f"triangle {triangle.id!r}: {e.hypothesis}") from e

    if bound is None:
        raise PreconditionFailed("the tiling has at least one triangle")
    eta = -bound.K_bound * q
    eps_T = min(eps, eta / (q * math.pi))
    certificate = check_theorem_T(tiling.singleton_clusters(), eps_T, 1)
    certificate.theorem = "corollary"
    certificate.notes.append(
        f"q = {q}, eta = {eta:.12g}, K(Delta) <= -eta/q = {bound.K_bound:.12g}; "
        f"Theorem T checked with eps' = {eps_T:.12g}"
    )
    certificate.notes.append(
        "area bound uses the equilateral inscribed triangle as the maximizer "
        "(checked by sampling)"
    )
    return certificate
