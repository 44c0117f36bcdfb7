"""
Face tracing for line complexes.

The face of label pair (j, j+1) through a vertex occupies the corner between those two
labels. Walking the face boundary, a circle vertex is left through label j+1 and a cross
vertex through label j, so every face boundary alternates the labels j and j+1 and
the faces of pair j are the components of the subgraph spanned by those two labels.
"""

import dataclasses
import math
import time
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from conformal_type_lab.config import config
from conformal_type_lab.errors import NonOrientableWalk
from conformal_type_lab.line_complex.complex import CIRCLE, HalfPerimeter, LineComplex
from conformal_type_lab.utils import create_logger, natural_key

CLOSED = "closed"
DECLARED = "declared"
UNKNOWN = "unknown"


@dataclasses.dataclass(frozen=True)
class Face:
    """A traced face.

    Attributes:
        id (str): ``"<j>:<smallest vertex id on the walk>"``.
        labels (Tuple[int, int]): The label pair (j, j+1 mod q) alternating on the boundary.
        m (Optional[HalfPerimeter]): Half-perimeter; ``math.inf`` for a logarithmic face,
            None when unknown.
        status (str): ``closed`` (walk closes), ``declared`` (walk leaves the truncation and
            m is declared) or ``unknown``.
        boundary (Tuple[Tuple[str, str], ...]): The walk as (vertex id, departing edge id)
            steps. Open walks end at a vertex whose departing half-edge is on the frontier;
            that last step carries an empty edge id.
    """

    id: str
    labels: Tuple[int, int]
    m: Optional[HalfPerimeter]
    status: str
    boundary: Tuple[Tuple[str, str], ...]

    @property
    def j(self) -> int:
        return self.labels[0]

    @property
    def is_resolved(self) -> bool:
        return self.m is not None

    @property
    def is_infinite(self) -> bool:
        return self.m is not None and math.isinf(self.m)

    @property
    def vertex_ids(self) -> List[str]:
        return [vertex_id for vertex_id, _ in self.boundary]

    def inverse_half_perimeter(self) -> Fraction:
        """1/m as an exact rational, with 1/∞ = 0."""
        if self.m is None:
            raise ValueError(f"Face {self.id} has unknown half-perimeter")
        return Fraction(0) if math.isinf(self.m) else Fraction(1, int(self.m))


class FaceSet:
    """The faces of a complex together with the corner-to-face map."""

    def __init__(self, faces: List[Face], corners: Dict[Tuple[str, int], str]):
        self._faces: Dict[str, Face] = {face.id: face for face in faces}
        self._corners = corners

    def __iter__(self) -> Iterator[Face]:
        return iter(self._faces.values())

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, face) -> bool:
        return isinstance(face, Face) and self._faces.get(face.id) == face

    def __getitem__(self, face_id: str) -> Face:
        return self._faces[face_id]

    def face_at(self, vertex_id: str, j: int) -> Face:
        """The face occupying corner j (between labels j and j+1) at a vertex."""
        return self._faces[self._corners[(vertex_id, j)]]

    def faces_at(self, vertex_id: str, q: int) -> List[Face]:
        return [self.face_at(vertex_id, j) for j in range(1, q + 1)]

    @property
    def closed(self) -> List[Face]:
        return [face for face in self if face.status == CLOSED]

    @property
    def unresolved(self) -> List[Face]:
        return [face for face in self if face.status == UNKNOWN]


class FaceTracer:
    """Traces every face of a validated complex."""

    def __init__(self, complex_: LineComplex):
        self.complex = complex_
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )
        self._step_budget = len(complex_.edges) + 1
        self._declared = complex_.declaration_map()

    def _departure_label(self, vertex_id: str, j: int) -> int:
        if self.complex.parity(vertex_id) == CIRCLE:
            return self.complex.next_label(j)
        return j

    def _arrival_label(self, vertex_id: str, j: int) -> int:
        if self.complex.parity(vertex_id) == CIRCLE:
            return j
        return self.complex.next_label(j)

    def trace(self) -> FaceSet:
        """Trace all faces.

        Returns:
            FaceSet: Faces ordered by label pair, then by smallest vertex id.

        Raises:
            NonOrientableWalk: If a walk fails to close within |E| steps or re-enters
                itself away from its start.
        """
        start_time = time.time()
        corners: Dict[Tuple[str, int], str] = {}
        faces: List[Face] = []
        for j in range(1, self.complex.q + 1):
            for vertex_id in self.complex.vertex_ids:
                if (vertex_id, j) in corners:
                    continue
                face = self._trace_from(vertex_id, j)
                for member in face.vertex_ids:
                    corners[(member, j)] = face.id
                faces.append(face)

        self.logger.debug(
            f"Traced {len(faces)} faces on {len(self.complex)} vertices "
            f"in {time.time() - start_time:.3f} seconds"
        )
        return FaceSet(faces, corners)

    def _trace_from(self, start: str, j: int) -> Face:
        boundary: List[Tuple[str, str]] = []
        seen = {start}
        current = start
        closed = False
        for _ in range(self._step_budget):
            edge = self.complex.edge_at(current, self._departure_label(current, j))
            if edge is None:
                boundary.append((current, ""))
                break
            boundary.append((current, edge.id))
            current = edge.other(current)
            if current == start:
                closed = True
                break
            if current in seen:
                raise NonOrientableWalk(start, len(boundary))
            seen.add(current)
        else:
            raise NonOrientableWalk(start, self._step_budget)

        if not closed:
            boundary = self._trace_backward(start, j, seen) + boundary

        vertex_ids = [vertex_id for vertex_id, _ in boundary]
        face_id = f"{j}:{min(vertex_ids, key=natural_key)}"
        labels = (j, self.complex.next_label(j))

        if closed:
            circles = sum(1 for v in vertex_ids if self.complex.parity(v) == CIRCLE)
            return Face(face_id, labels, circles, CLOSED, tuple(boundary))

        declared = [
            self._declared[(v, j)] for v in sorted(vertex_ids, key=natural_key)
            if (v, j) in self._declared
        ]
        if declared:
            return Face(face_id, labels, declared[0], DECLARED, tuple(boundary))
        return Face(face_id, labels, None, UNKNOWN, tuple(boundary))

    def _trace_backward(self, start: str, j: int, seen: set) -> List[Tuple[str, str]]:
        prefix: List[Tuple[str, str]] = []
        current = start
        for _ in range(self._step_budget):
            edge = self.complex.edge_at(current, self._arrival_label(current, j))
            if edge is None:
                return prefix
            previous = edge.other(current)
            if previous in seen:
                raise NonOrientableWalk(start, len(prefix) + len(seen))
            seen.add(previous)
            prefix.insert(0, (previous, edge.id))
            current = previous
        raise NonOrientableWalk(start, self._step_budget)


def trace_faces(complex_: LineComplex) -> FaceSet:
    """Trace the faces of a line complex (see :class:`FaceTracer`)."""
    return FaceTracer(complex_).trace()


def euler_characteristic(complex_: LineComplex) -> int:
    """|V| − |E| + |F| of the complex; equals 2 for a closed planar complex."""
    return len(complex_) - len(complex_.edges) + len(complex_.faces())


def face_corner_count(complex_: LineComplex) -> Tuple[int, int]:
    """Corners on closed faces and corners on faces reaching the frontier.

    Their sum is q·|V|: every vertex contributes one corner per label pair.
    """
    closed_corners = 0
    open_corners = 0
    for face in complex_.faces():
        if face.status == CLOSED:
            closed_corners += len(face.boundary)
        else:
            open_corners += len(face.boundary)
    return closed_corners, open_corners
