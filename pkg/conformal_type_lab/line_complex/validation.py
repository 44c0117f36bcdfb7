"""Validation of line complexes: structural properties, face consistency and declarations."""

import math
from collections import Counter
from typing import List

import networkx as nx

from conformal_type_lab.config import config
from conformal_type_lab.errors import NonOrientableWalk
from conformal_type_lab.line_complex.complex import (
    CIRCLE, CROSS, PARITIES, Diagnostic, LineComplex,)
from conformal_type_lab.line_complex.faces import CLOSED, euler_characteristic
from conformal_type_lab.utils import create_logger, format_half_perimeter

logger = create_logger(
    name=__name__,
    log_level=config.log_level,
    log_file=config.log_file,
)


def validate(complex_: LineComplex) -> List[Diagnostic]:
    """Check every line-complex property and return the violations found.

    Structural properties (bipartite, degree/labels, connectivity) are checked first.
    Faces are traced only when the structure is sound; then face lengths, the Euler
    characteristic of closed complexes and face declarations are checked. Boundaries
    alternate their label pair by construction of the trace, so a complex that passes the
    degree check and traces without NonOrientableWalk has alternating faces.

    Args:
        complex_ (LineComplex): The complex to check.

    Returns:
        List[Diagnostic]: Empty iff the complex is a valid line complex.
    """
    diagnostics: List[Diagnostic] = []
    diagnostics.extend(_check_structure(complex_))
    if diagnostics:
        for diagnostic in diagnostics:
            logger.warning(f"Validation: {diagnostic}")
        return diagnostics

    try:
        faces = complex_.faces()
    except NonOrientableWalk as e:
        diagnostic = Diagnostic("rotation", str(e), e.start)
        logger.warning(f"Validation: {diagnostic}")
        return [diagnostic]

    diagnostics.extend(_check_faces(complex_, faces))
    if complex_.is_closed:
        chi = euler_characteristic(complex_)
        if chi != 2:
            diagnostics.append(Diagnostic(
                "planarity",
                f"closed complex has Euler characteristic {chi}, expected 2",
                complex_.vertex_ids[0],
            ))
    diagnostics.extend(_check_declarations(complex_, faces))

    for diagnostic in diagnostics:
        logger.warning(f"Validation: {diagnostic}")
    return diagnostics


def _check_structure(complex_: LineComplex) -> List[Diagnostic]:
    diagnostics: List[Diagnostic] = []
    q = complex_.q
    if q < 2:
        diagnostics.append(Diagnostic("degree", f"q={q} must be at least 2", f"q={q}"))
        return diagnostics
    if len(complex_) == 0:
        diagnostics.append(Diagnostic("connected", "complex has no vertices", "-"))
        return diagnostics

    for vertex_id, parity in complex_.vertices.items():
        if parity not in PARITIES:
            diagnostics.append(Diagnostic(
                "parity", f"vertex parity {parity!r} is not 'o' or 'x'", vertex_id))

    label_counts = {vertex_id: Counter() for vertex_id in complex_.vertex_ids}
    for edge in complex_.edges:
        unknown = [v for v in (edge.circle, edge.cross) if v not in complex_]
        if unknown:
            diagnostics.append(Diagnostic(
                "unknown-vertex", f"edge {edge.id} references unknown vertex {unknown[0]!r}",
                edge.id))
            continue
        if not 1 <= edge.label <= q:
            diagnostics.append(Diagnostic(
                "label", f"edge {edge.id} has label {edge.label} outside 1..{q}", edge.id))
            continue
        if complex_.parity(edge.circle) != CIRCLE or complex_.parity(edge.cross) != CROSS:
            diagnostics.append(Diagnostic(
                "bipartite",
                f"edge {edge.id} joins {edge.circle} ({complex_.parity(edge.circle)}) and "
                f"{edge.cross} ({complex_.parity(edge.cross)})",
                edge.id,
            ))
        label_counts[edge.circle][edge.label] += 1
        if edge.cross != edge.circle:
            label_counts[edge.cross][edge.label] += 1

    for vertex_id, label in sorted(complex_.frontier):
        if vertex_id not in complex_ or not 1 <= label <= q:
            diagnostics.append(Diagnostic(
                "frontier", f"frontier entry ({vertex_id}, {label}) is out of range",
                vertex_id))
            continue
        label_counts[vertex_id][label] += 1

    for vertex_id in complex_.vertex_ids:
        for label in range(1, q + 1):
            count = label_counts[vertex_id][label]
            if count == 0:
                diagnostics.append(Diagnostic(
                    "degree", f"vertex carries no edge or frontier entry with label {label}",
                    vertex_id))
            elif count > 1:
                diagnostics.append(Diagnostic(
                    "degree", f"label {label} appears {count} times at the vertex", vertex_id))

    graph = complex_.to_networkx()
    if not nx.is_connected(graph):
        components = sorted(nx.connected_components(graph), key=len)
        witness = complex_.vertex_ids[0] if not components else sorted(components[0])[0]
        diagnostics.append(Diagnostic(
            "connected", f"complex has {len(components)} components", witness))
    return diagnostics


def _check_faces(complex_: LineComplex, faces) -> List[Diagnostic]:
    diagnostics: List[Diagnostic] = []
    for face in faces:
        if face.status == CLOSED and len(face.boundary) != 2 * face.m:
            diagnostics.append(Diagnostic(
                "face-length", f"face {face.id} has {len(face.boundary)} boundary edges "
                f"for half-perimeter {face.m}", face.id))
    return diagnostics


def _check_declarations(complex_: LineComplex, faces) -> List[Diagnostic]:
    diagnostics: List[Diagnostic] = []
    seen_on_face = {}
    for declaration in complex_.declarations:
        if declaration.vertex not in complex_ or not 1 <= declaration.j <= complex_.q:
            diagnostics.append(Diagnostic(
                "face-declaration",
                f"declaration ({declaration.vertex}, {declaration.j}) is out of range",
                declaration.vertex))
            continue
        face = faces.face_at(declaration.vertex, declaration.j)
        declared = format_half_perimeter(declaration.m)
        if face.status == CLOSED:
            if face.m != declaration.m:
                diagnostics.append(Diagnostic(
                    "face-declaration",
                    f"declared m={declared} contradicts closed face {face.id} with m={face.m}",
                    declaration.vertex))
            continue
        circles = sum(1 for v in face.vertex_ids if complex_.parity(v) == CIRCLE)
        if not math.isinf(declaration.m) and declaration.m < max(circles, 1):
            diagnostics.append(Diagnostic(
                "face-declaration",
                f"declared m={declared} is below the {circles} circle vertices already on "
                f"face {face.id}", declaration.vertex))
        previous = seen_on_face.setdefault(face.id, declaration.m)
        if previous != declaration.m:
            diagnostics.append(Diagnostic(
                "face-declaration",
                f"face {face.id} is declared with both m={format_half_perimeter(previous)} "
                f"and m={declared}", declaration.vertex))
    return diagnostics
