"""
Excess, balls and mean excess of line complexes.

The excess at a vertex p with incident faces of half-perimeters m_1..m_q is
E_p = Σ 1/m_i − q + 2, with 1/∞ = 0. All values are exact rationals.
"""

import dataclasses
import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional

import networkx as nx

from conformal_type_lab.config import config
from conformal_type_lab.errors import UnresolvedExcess
from conformal_type_lab.line_complex.complex import HalfPerimeter, LineComplex
from conformal_type_lab.utils import create_logger

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)


@dataclasses.dataclass(frozen=True)
class ExcessReport:
    """Per-vertex excess of a complex.

    Attributes:
        values: Vertex id to E_p, or None where an incident face is unknown.
        regular_value: The common excess E when every vertex is resolved and all agree.
    """

    values: Dict[str, Optional[Fraction]]
    regular_value: Optional[Fraction]

    @property
    def unresolved(self) -> List[str]:
        return [vertex_id for vertex_id, value in self.values.items() if value is None]

    @property
    def is_regularly_ramified(self) -> bool:
        return self.regular_value is not None


@dataclasses.dataclass(frozen=True)
class MeanExcessRow:
    j: int
    n_j: int
    partial_mean: Fraction


def excess_from_half_perimeters(q: int, half_perimeters: Iterable[HalfPerimeter]) -> Fraction:
    """Σ 1/m_i − q + 2 for the given half-perimeters (``math.inf`` contributes 0)."""
    total = Fraction(0)
    for m in half_perimeters:
        if not math.isinf(m):
            total += Fraction(1, int(m))
    return total - q + 2


def vertex_excess(complex_: LineComplex, p: str) -> Optional[Fraction]:
    """Exact excess E_p at vertex p.

    Args:
        complex_ (LineComplex): A validated complex.
        p (str): The vertex id.

    Returns:
        Optional[Fraction]: E_p, or None (unresolved) if an incident face is unknown.

    Raises:
        UnknownVertex: If p is not a vertex.
    """
    complex_.require(p)
    faces = complex_.faces().faces_at(p, complex_.q)
    if any(not face.is_resolved for face in faces):
        return None
    return excess_from_half_perimeters(complex_.q, [face.m for face in faces])


def excess_report(complex_: LineComplex) -> ExcessReport:
    values = {vertex_id: vertex_excess(complex_, vertex_id) for vertex_id in complex_.vertex_ids}
    resolved = set(values.values())
    regular = None
    if None not in resolved and len(resolved) == 1:
        regular = resolved.pop()
    return ExcessReport(values, regular)


def ball(complex_: LineComplex, p: str, j: int) -> FrozenSet[str]:
    """Vertices at graph distance at most j from p.

    Raises:
        UnknownVertex: If p is not a vertex.
        ValueError: If j is negative.
    """
    complex_.require(p)
    if j < 0:
        raise ValueError(f"ball radius must be >= 0, got {j}")
    distances = nx.single_source_shortest_path_length(complex_.simple_graph(), p, cutoff=j)
    return frozenset(distances)


def ball_growth_ok(complex_: LineComplex, p: str, j: int) -> bool:
    """Whether |B(p, j+1)| ≤ q·|B(p, j)|."""
    return len(ball(complex_, p, j + 1)) <= complex_.q * len(ball(complex_, p, j))


def mean_excess_sequence(complex_: LineComplex, p: str, jmax: int) -> List[MeanExcessRow]:
    """Partial means (1/n_j) Σ_{p' ∈ B(p, j)} E_{p'} for j = 0..jmax.

    No limit is claimed; the sequence depends on the base point in general.

    Raises:
        UnknownVertex: If p is not a vertex.
        UnresolvedExcess: If a vertex of some ball has unresolved excess; the error
            carries the smallest such j.
    """
    complex_.require(p)
    if jmax < 0:
        raise ValueError(f"jmax must be >= 0, got {jmax}")

    distances = nx.single_source_shortest_path_length(complex_.simple_graph(), p, cutoff=jmax)
    shells: Dict[int, List[str]] = defaultdict(list)
    for vertex_id, distance in distances.items():
        shells[distance].append(vertex_id)

    rows: List[MeanExcessRow] = []
    total = Fraction(0)
    count = 0
    for j in range(jmax + 1):
        for vertex_id in sorted(shells.get(j, ())):
            value = vertex_excess(complex_, vertex_id)
            if value is None:
                raise UnresolvedExcess(vertex_id, j)
            total += value
            count += 1
        rows.append(MeanExcessRow(j, count, total / count))
    logger.debug(f"Mean excess from {p} through j={jmax}: {rows[-1].partial_mean}")
    return rows


def is_regularly_ramified(complex_: LineComplex) -> Optional[Fraction]:
    """Common excess E if all vertices share it, else None.

    Raises:
        UnresolvedExcess: If any vertex has unresolved excess.
    """
    report = excess_report(complex_)
    if report.unresolved:
        raise UnresolvedExcess(report.unresolved[0])
    return report.regular_value
