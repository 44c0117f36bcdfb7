"""
Certificates for the hyperbolicity criteria on line complexes.

``certify_T2`` checks a supplied partition: every piece needs #(piece) <= M and an excess
sum <= −ε. ``certify_Tfinal`` checks the uniform condition on all connected subgraphs of
size >= M, either through a constructed partition plus a scan of connected subgraphs of
size in [M, 2qM²], or by exhaustive enumeration on small complexes. Both modes reach the
same verdict on finite resolved complexes. All comparisons are exact.
"""

import time
from fractions import Fraction
from multiprocessing.pool import ThreadPool
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from conformal_type_lab.certificates import (
    HYPERBOLIC, INCONCLUSIVE, PIECE_INCONCLUSIVE, PIECE_OK, PIECE_VIOLATED,
    SPHERICAL_ISOPERIMETRIC_ANNOTATION, VIOLATED, Certificate, PieceRecord,)
from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, TooLarge, UnresolvedExcess
from conformal_type_lab.line_complex.complex import LineComplex
from conformal_type_lab.line_complex.excess import excess_report
from conformal_type_lab.partitioner.splitting import partition_lemma_par2
from conformal_type_lab.partitioner.subgraph import GraphPartition, SubgraphHandle
from conformal_type_lab.utils import create_logger, fraction_to_dict, natural_key, to_fraction

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)

CONSTRUCTIVE = "constructive"
EXHAUSTIVE = "exhaustive"
MODES = (CONSTRUCTIVE, EXHAUSTIVE)


def _positive_eps(eps) -> Fraction:
    value = to_fraction(eps)
    if value <= 0:
        raise DomainError("eps", eps, "rationals > 0")
    return value


def _check_piece(piece_id: str, piece: SubgraphHandle, values: Dict[str, Optional[Fraction]],
                 frontier_vertices, eps: Fraction, M: int) -> PieceRecord:
    ids = piece.sorted_vertices()
    if piece.infinite:
        return PieceRecord(piece_id, ids, piece.size, None, PIECE_INCONCLUSIVE)
    unresolved = [v for v in ids if values[v] is None]
    if unresolved:
        if piece.vertices & frontier_vertices:
            return PieceRecord(piece_id, ids, piece.size, None, PIECE_INCONCLUSIVE)
        raise UnresolvedExcess(unresolved[0])

    total = sum((values[v] for v in ids), Fraction(0))
    violations = []
    if piece.size > M:
        violations.append("M1'")
    if total > -eps:
        violations.append("M2'")
    status = PIECE_VIOLATED if violations else PIECE_OK
    return PieceRecord(piece_id, ids, piece.size, total, status, violations)


def _witness(record: PieceRecord, eps: Fraction, M: int) -> Dict[str, Any]:
    condition = record.violations[0]
    if condition == "M1'":
        detail = f"#(piece) = {record.size} > M = {M}"
    else:
        detail = f"excess sum {record.total} > -eps = {-eps}"
    return {
        "condition": condition,
        "piece": record.id,
        "size": record.size,
        "excess_sum": fraction_to_dict(record.total),
        "detail": detail,
    }


def _verdict(records: List[PieceRecord]) -> str:
    if any(record.status == PIECE_VIOLATED for record in records):
        return VIOLATED
    if any(record.status == PIECE_INCONCLUSIVE for record in records):
        return INCONCLUSIVE
    return HYPERBOLIC


def certify_T2(complex_: LineComplex, partition: GraphPartition, eps, M: int,
               parallel: bool = False, theorem: str = "T2") -> Certificate:
    """Check (M1)' #(piece) <= M and (M2)' Σ E_p <= −ε on every piece of a partition.

    Pieces flagged infinite, and pieces with unresolved excess that contain a frontier
    vertex, are inconclusive. The verdict is conditions-violated if any checked piece fails,
    inconclusive if some piece could not be checked, hyperbolic otherwise.

    Args:
        complex_ (LineComplex): The complex.
        partition (GraphPartition): Pieces covering every vertex of the complex.
        eps: ε > 0, converted to an exact rational.
        M (int): Piece size bound, at least 1.
        parallel (bool): Check pieces on a thread pool.
        theorem (str): Tag recorded in the certificate.

    Raises:
        DomainError: If ε <= 0 or M < 1.
        InvalidPartition: If the pieces do not cover exactly the vertices of the complex.
        UnresolvedExcess: If a piece away from the frontier has unresolved excess.
    """
    eps = _positive_eps(eps)
    if M < 1:
        raise DomainError("M", M, "integers >= 1")
    partition.check_cover(complex_.vertex_ids)
    start_time = time.time()

    values = excess_report(complex_).values
    frontier_vertices = complex_.frontier_vertices
    items = partition.items()

    def check(item: Tuple[str, SubgraphHandle]) -> PieceRecord:
        piece_id, piece = item
        return _check_piece(piece_id, piece, values, frontier_vertices, eps, M)

    if parallel and len(items) > 1:
        workers = config.get_partitioner_settings()["parallel_workers"]
        with ThreadPool(workers) as pool:
            records = pool.map(check, items)
    else:
        records = [check(item) for item in items]
    records.sort(key=lambda record: natural_key(record.id))

    verdict = _verdict(records)
    violated = [record for record in records if record.status == PIECE_VIOLATED]
    certificate = Certificate(
        verdict=verdict,
        theorem=theorem,
        eps=eps,
        M=M,
        q=complex_.q,
        pieces=records,
        witness=_witness(violated[0], eps, M) if violated else None,
    )
    if verdict == HYPERBOLIC:
        certificate.annotation = SPHERICAL_ISOPERIMETRIC_ANNOTATION
    inconclusive = [record.id for record in records if record.status == PIECE_INCONCLUSIVE]
    if inconclusive:
        logger.warning(f"{len(inconclusive)} pieces meet the frontier and were not checked")
        certificate.notes.append(
            f"pieces meeting the frontier are inconclusive: {', '.join(inconclusive[:8])}"
            + (", ..." if len(inconclusive) > 8 else "")
        )
    logger.info(
        f"{theorem} certificate for {len(records)} pieces: {verdict} "
        f"in {time.time() - start_time:.3f} seconds"
    )
    return certificate


def certify_regularly_ramified(complex_: LineComplex, eps=None) -> Certificate:
    """The M = 1 case of :func:`certify_T2` with singleton pieces.

    Without ``eps``, ε is taken as −max E_p when every excess is negative, which for a
    regularly ramified complex with E < 0 is ε = −E. Otherwise the certificate reports the
    vertex of largest excess as the witness.

    Raises:
        UnresolvedExcess: If some vertex has unresolved excess.
    """
    report = excess_report(complex_)
    if report.unresolved:
        raise UnresolvedExcess(report.unresolved[0])
    top = max(report.values.values())
    if eps is None:
        eps = -top if top < 0 else Fraction(1)
    certificate = certify_T2(
        complex_, GraphPartition.singletons(complex_), eps, 1, theorem="T2 (M=1)"
    )
    if report.regular_value is not None:
        certificate.notes.append(f"regularly ramified with E = {report.regular_value}")
    else:
        certificate.notes.append("excess is not constant; not regularly ramified")
    return certificate


def connected_subsets(graph: nx.Graph, roots: Iterable[str], order: Sequence[str],
                      max_size: Optional[int] = None) -> Iterator[FrozenSet[str]]:
    """Every connected vertex set of ``graph`` exactly once, up to ``max_size`` vertices.

    Sets are grown from their smallest member (in ``order``) by adding exclusive
    neighbours only, so no set is produced twice.
    """
    index = {v: i for i, v in enumerate(order)}

    def extend(subset: FrozenSet[str], extension: List[str], covered: FrozenSet[str],
               root: str) -> Iterator[FrozenSet[str]]:
        yield subset
        if max_size is not None and len(subset) >= max_size:
            return
        pending = list(extension)
        while pending:
            w = pending.pop(0)
            exclusive = [
                u for u in graph.neighbors(w)
                if index[u] > index[root] and u not in covered
            ]
            new_covered = covered | frozenset(exclusive)
            yield from extend(subset | {w}, pending + sorted(exclusive, key=index.get),
                              new_covered, root)

    for root in roots:
        start = [u for u in graph.neighbors(root) if index[u] > index[root]]
        start = sorted(set(start), key=index.get)
        yield from extend(frozenset([root]), start, frozenset([root, *start]), root)


def _scan_windows(complex_: LineComplex, values: Dict[str, Optional[Fraction]], eps: Fraction,
                  M: int, bound: int) -> Tuple[Optional[PieceRecord], int, bool]:
    """First connected subgraph of size in [M, bound] with Σ E_p > −ε.

    Returns the violating record (or None), the number of subgraphs visited and whether the
    scan finished within ``window_budget``. Subgraphs with unresolved excess are skipped.
    """
    budget = config.get_partitioner_settings()["window_budget"]
    order = complex_.vertex_ids
    roots = tqdm(order, desc="Bounded subgraphs", leave=False) if config.show_progress else order
    visited = 0
    for members in connected_subsets(complex_.simple_graph(), roots, order, max_size=bound):
        visited += 1
        if visited > budget:
            return None, visited - 1, False
        if len(members) < M or any(values[v] is None for v in members):
            continue
        total = sum((values[v] for v in members), Fraction(0))
        if total > -eps:
            ids = sorted(members, key=natural_key)
            return PieceRecord("S1", ids, len(ids), total, PIECE_VIOLATED, ["M2'"]), visited, True
    return None, visited, True


def _constructive(complex_: LineComplex, eps: Fraction, M: int,
                  parallel: bool) -> Certificate:
    handle = SubgraphHandle.from_complex(complex_)
    pieces = partition_lemma_par2(handle, M)
    partition = GraphPartition(pieces)
    bound = 2 * complex_.q * M * M
    certificate = certify_T2(complex_, partition, eps, bound, parallel, theorem="Tfinal")
    certificate.M = M
    certificate.notes.append(
        f"constructive: {len(pieces)} pieces, each checked against #(piece) <= 2qM^2 = {bound}"
    )
    if certificate.verdict == VIOLATED:
        return certificate

    # A violating subgraph of size >= M splits into pieces in [M, 2qM^2], one of which violates.
    record, visited, finished = _scan_windows(
        complex_, excess_report(complex_).values, eps, M, bound
    )
    if record is not None:
        certificate.verdict = VIOLATED
        certificate.annotation = None
        certificate.pieces.append(record)
        certificate.witness = _witness(record, eps, M)
        certificate.notes.append(
            f"constructive: connected subgraph of size {record.size} violates M2' "
            f"after {visited} subgraphs"
        )
    elif not finished:
        logger.warning(f"Stopped after {visited} connected subgraphs of size <= {bound}")
        certificate.verdict = INCONCLUSIVE
        certificate.annotation = None
        certificate.notes.append(
            f"constructive: window_budget reached after {visited} connected subgraphs"
        )
    else:
        certificate.notes.append(
            f"constructive: all {visited} connected subgraphs of size <= {bound} checked"
        )
    return certificate


def _exhaustive(complex_: LineComplex, eps: Fraction, M: int) -> Certificate:
    cap = config.get_partitioner_settings()["exhaustive_cap"]
    if len(complex_) > cap:
        raise TooLarge(len(complex_), cap)
    report = excess_report(complex_)
    if report.unresolved:
        raise UnresolvedExcess(report.unresolved[0])

    roots = complex_.vertex_ids
    if config.show_progress:
        roots = tqdm(roots, desc="Connected subgraphs", leave=False)
    checked = 0
    for members in connected_subsets(complex_.simple_graph(), roots, complex_.vertex_ids):
        if len(members) < M:
            continue
        checked += 1
        total = sum((report.values[v] for v in members), Fraction(0))
        if total > -eps:
            ids = sorted(members, key=natural_key)
            record = PieceRecord("S1", ids, len(ids), total, PIECE_VIOLATED, ["M2'"])
            return Certificate(
                verdict=VIOLATED, theorem="Tfinal", eps=eps, M=M, q=complex_.q,
                pieces=[record], witness=_witness(record, eps, M),
                notes=[f"exhaustive: violation found after {checked} connected subgraphs"],
            )
    return Certificate(
        verdict=HYPERBOLIC, theorem="Tfinal", eps=eps, M=M, q=complex_.q,
        annotation=SPHERICAL_ISOPERIMETRIC_ANNOTATION,
        notes=[f"exhaustive: all {checked} connected subgraphs of size >= {M} checked"],
    )


def certify_Tfinal(complex_: LineComplex, eps, M: int, mode: str = CONSTRUCTIVE,
                   parallel: bool = False) -> Certificate:
    """Check Σ E_p <= −ε over connected subgraphs of size >= M.

    ``constructive`` partitions the complex into pieces of size in [M, 2qM²], delegates
    to :func:`certify_T2` with bound 2qM², then scans every connected subgraph of size in
    [M, 2qM²]. Any violating subgraph of size >= M splits into such pieces, one of which
    violates, so the verdict equals the exhaustive one. The scan stops at
    ``window_budget`` subgraphs and the verdict is then inconclusive. ``exhaustive``
    enumerates every connected subgraph; it is an oracle for complexes of at most
    ``exhaustive_cap`` vertices.
    A complex with fewer than M vertices yields an inconclusive certificate.

    Raises:
        DomainError: If ε <= 0, M < 2 or the mode is unknown.
        TooLarge: If exhaustive mode is requested beyond the size cap.
        UnresolvedExcess: In exhaustive mode, if any excess is unresolved.
    """
    eps = _positive_eps(eps)
    if M < 2:
        raise DomainError("M", M, "integers >= 2")
    if mode not in MODES:
        raise DomainError("mode", mode, f"one of {MODES}")
    start_time = time.time()
    if len(complex_) < M:
        certificate = Certificate(
            verdict=INCONCLUSIVE, theorem="Tfinal", eps=eps, M=M, q=complex_.q,
            notes=[f"{mode}: the complex has fewer than M = {M} vertices"],
        )
    elif mode == CONSTRUCTIVE:
        certificate = _constructive(complex_, eps, M, parallel)
    else:
        certificate = _exhaustive(complex_, eps, M)
    logger.info(
        f"Tfinal ({mode}) on {len(complex_)} vertices: {certificate.verdict} "
        f"in {time.time() - start_time:.3f} seconds"
    )
    return certificate
