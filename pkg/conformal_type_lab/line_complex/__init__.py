"""
Line complexes (Speiser graphs): data model, validation, face tracing, excess and
generators.
"""

from conformal_type_lab.line_complex.complex import (
    CIRCLE, CROSS, Diagnostic, Edge, FaceDeclaration, LineComplex,)
from conformal_type_lab.line_complex.excess import (
    ExcessReport, MeanExcessRow, ball, ball_growth_ok, excess_from_half_perimeters,
    excess_report, is_regularly_ramified, mean_excess_sequence, vertex_excess,)
from conformal_type_lab.line_complex.faces import (
    Face, FaceSet, euler_characteristic, face_corner_count, trace_faces,)
from conformal_type_lab.line_complex.generators import (
    ClassicScheme, ClosedScheme, RegularScheme, classic, closed, generate, regular,)
from conformal_type_lab.line_complex.validation import validate

__all__ = [
    'CIRCLE',
    'CROSS',
    'ClassicScheme',
    'ClosedScheme',
    'Diagnostic',
    'Edge',
    'ExcessReport',
    'Face',
    'FaceDeclaration',
    'FaceSet',
    'LineComplex',
    'MeanExcessRow',
    'RegularScheme',
    'ball',
    'ball_growth_ok',
    'classic',
    'closed',
    'euler_characteristic',
    'excess_from_half_perimeters',
    'excess_report',
    'face_corner_count',
    'generate',
    'is_regularly_ramified',
    'mean_excess_sequence',
    'regular',
    'trace_faces',
    'validate',
    'vertex_excess',
]
