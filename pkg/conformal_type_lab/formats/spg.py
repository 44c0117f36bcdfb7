"""
The ``.spg`` line complex format.

    spg 1 q=<q>
    v <id> <o|x>
    e <circle-id> <cross-id> <label>
    frontier <id> <label>
    face <vertex-id> <j> <m|inf>

The header comes first. Serialization lists vertices in natural id order, edges by
(circle, label), then frontier entries and face declarations.
"""

from typing import Dict, List, Mapping, Tuple

from conformal_type_lab.formats.base import Line, TextFormat, tokenize
from conformal_type_lab.line_complex.complex import (
    PARITIES, Edge, FaceDeclaration, LineComplex,)
from conformal_type_lab.utils import format_half_perimeter, natural_key, parse_half_perimeter

VERSION = "1"


class SpgFormat(TextFormat[LineComplex]):
    suffix = ".spg"

    def _header(self, path: str, line: Line) -> int:
        self.expect_count(path, line, 3, 3)
        if line.keyword != "spg":
            raise self.error(path, line, 0, "file must start with the header 'spg 1 q=<q>'")
        if line.tokens[1].text != VERSION:
            raise self.error(path, line, 1, f"unsupported version {line.tokens[1].text!r}")
        q_token = line.tokens[2].text
        if not q_token.startswith("q="):
            raise self.error(path, line, 2, f"expected q=<q>, got {q_token!r}")
        try:
            q = int(q_token[2:])
        except ValueError:
            raise self.error(path, line, 2, f"expected an integer degree in {q_token!r}") \
                from None
        if q < 1:
            raise self.error(path, line, 2, f"degree must be positive, got {q}")
        return q

    def _vertex(self, path: str, line: Line, known: Mapping[str, str], index: int) -> str:
        vertex_id = line.tokens[index].text
        if vertex_id not in known:
            raise self.error(path, line, index, f"unknown vertex {vertex_id!r}")
        return vertex_id

    def parse(self, text: str, path: str = "<string>") -> LineComplex:
        lines = list(tokenize(text))
        if not lines:
            raise self.empty(path, "the header 'spg 1 q=<q>'")
        q = self._header(path, lines[0])

        vertices: Dict[str, str] = {}
        edges: List[Edge] = []
        frontier: List[Tuple[str, int]] = []
        declarations: List[FaceDeclaration] = []
        for line in lines[1:]:
            keyword = line.keyword
            if keyword == "v":
                self.expect_count(path, line, 3, 3)
                vertex_id, parity = line.tokens[1].text, line.tokens[2].text
                if vertex_id in vertices:
                    raise self.error(path, line, 1, f"duplicate vertex {vertex_id!r}")
                if parity not in PARITIES:
                    raise self.error(path, line, 2, f"parity must be o or x, got {parity!r}")
                vertices[vertex_id] = parity
            elif keyword == "e":
                self.expect_count(path, line, 4, 4)
                circle = self._vertex(path, line, vertices, 1)
                cross = self._vertex(path, line, vertices, 2)
                edges.append(Edge(circle, cross, self.integer(path, line, 3)))
            elif keyword == "frontier":
                self.expect_count(path, line, 3, 3)
                vertex_id = self._vertex(path, line, vertices, 1)
                frontier.append((vertex_id, self.integer(path, line, 2)))
            elif keyword == "face":
                self.expect_count(path, line, 4, 4)
                vertex_id = self._vertex(path, line, vertices, 1)
                j = self.integer(path, line, 2)
                try:
                    m = parse_half_perimeter(line.tokens[3].text)
                except ValueError:
                    raise self.error(path, line, 3, "half-perimeter must be >= 1 or inf") \
                        from None
                declarations.append(FaceDeclaration(vertex_id, j, m))
            else:
                raise self.error(path, line, 0, f"unknown record {keyword!r}")

        complex_ = LineComplex(q, vertices, edges, frontier, declarations)
        self.logger.debug(f"Parsed {complex_!r} from {path}")
        return complex_

    def serialize(self, complex_: LineComplex) -> str:
        out = [f"spg {VERSION} q={complex_.q}"]
        out.extend(f"v {vertex_id} {parity}" for vertex_id, parity in complex_.vertices.items())
        out.extend(f"e {edge.circle} {edge.cross} {edge.label}" for edge in complex_.edges)
        for vertex_id, label in sorted(complex_.frontier,
                                       key=lambda item: (natural_key(item[0]), item[1])):
            out.append(f"frontier {vertex_id} {label}")
        out.extend(
            f"face {d.vertex} {d.j} {format_half_perimeter(d.m)}" for d in complex_.declarations
        )
        return "\n".join(out) + "\n"


spg_format = SpgFormat()
