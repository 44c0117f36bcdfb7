"""
The ``.tlg`` tiling format.

    vertex <id> <total-angle|inf>
    tri <id> <v1> <v2> <v3> <ang1> <ang2> <ang3> <len12> <len23> <len31> k=<k> \
        [omega=<w>] [turns=<t12>,<t23>,<t31>]
    cluster <cid> <tri-id>...

Angles are in radians. Floats are written with ``repr`` so that they read back exactly.
"""

import math
from typing import Dict, List, Tuple

from conformal_type_lab.formats.base import Line, TextFormat, format_float, tokenize
from conformal_type_lab.tiling.tiling import Tiling, Triangle

TRI_FIELDS = 12


class TlgFormat(TextFormat[Tiling]):
    suffix = ".tlg"

    def _turns(self, path: str, line: Line, index: int) -> Tuple[float, float, float]:
        text = line.tokens[index].text
        parts = text[len("turns="):].split(",")
        if len(parts) != 3:
            raise self.error(path, line, index, f"expected three turns in {text!r}")
        try:
            turns = tuple(float(part) for part in parts)
        except ValueError:
            raise self.error(path, line, index, f"bad number in {text!r}") from None
        if not all(math.isfinite(turn) for turn in turns):
            raise self.error(path, line, index, f"expected finite turns in {text!r}")
        return turns

    def _triangle(self, path: str, line: Line, vertices: Dict[str, float]) -> Triangle:
        self.expect_count(path, line, TRI_FIELDS, TRI_FIELDS + 2)
        tokens = line.tokens
        corners = []
        for index in (2, 3, 4):
            if tokens[index].text not in vertices:
                raise self.error(path, line, index, f"unknown vertex {tokens[index].text!r}")
            corners.append(tokens[index].text)
        angles = tuple(self.number(path, line, index) for index in (5, 6, 7))
        lengths = tuple(self.number(path, line, index) for index in (8, 9, 10))
        k = self.keyed_number(path, line, 11, "k")

        omega, turns = None, (0.0, 0.0, 0.0)
        for index in range(TRI_FIELDS, len(tokens)):
            text = tokens[index].text
            if text.startswith("omega=") and omega is None:
                omega = self.keyed_number(path, line, index, "omega")
            elif text.startswith("turns="):
                turns = self._turns(path, line, index)
            else:
                raise self.error(path, line, index, f"unexpected field {text!r}")
        return Triangle(
            id=tokens[1].text,
            vertices=tuple(corners),
            angles=angles,
            lengths=lengths,
            k=k,
            omega=omega,
            turns=turns,
        )

    def parse(self, text: str, path: str = "<string>") -> Tiling:
        vertices: Dict[str, float] = {}
        triangles: Dict[str, Triangle] = {}
        clusters: Dict[str, List[str]] = {}
        for line in tokenize(text):
            keyword = line.keyword
            if keyword == "vertex":
                self.expect_count(path, line, 3, 3)
                vertex_id = line.tokens[1].text
                if vertex_id in vertices:
                    raise self.error(path, line, 1, f"duplicate vertex {vertex_id!r}")
                total = self.number(path, line, 2, allow_inf=True)
                if total <= 0:
                    raise self.error(path, line, 2, "total angle must be positive")
                vertices[vertex_id] = total
            elif keyword == "tri":
                triangle = self._triangle(path, line, vertices)
                if triangle.id in triangles:
                    raise self.error(path, line, 1, f"duplicate triangle {triangle.id!r}")
                triangles[triangle.id] = triangle
            elif keyword == "cluster":
                self.expect_count(path, line, 3)
                cluster_id = line.tokens[1].text
                if cluster_id in clusters:
                    raise self.error(path, line, 1, f"duplicate cluster {cluster_id!r}")
                members = []
                for index, token in enumerate(line.tokens[2:], start=2):
                    if token.text not in triangles:
                        raise self.error(path, line, index, f"unknown triangle {token.text!r}")
                    members.append(token.text)
                clusters[cluster_id] = members
            else:
                raise self.error(path, line, 0, f"unknown record {keyword!r}")

        tiling = Tiling(vertices, triangles.values(), clusters)
        self.logger.debug(f"Parsed {tiling!r} from {path}")
        return tiling

    def serialize(self, tiling: Tiling) -> str:
        out = [
            f"vertex {vertex_id} {format_float(total)}"
            for vertex_id, total in tiling.total_angles.items()
        ]
        for t in tiling.triangles:
            fields = ["tri", t.id, *t.vertices]
            fields.extend(format_float(value) for value in t.angles + t.lengths)
            fields.append(f"k={format_float(t.k)}")
            if t.omega is not None:
                fields.append(f"omega={format_float(t.omega)}")
            if any(t.turns):
                fields.append("turns=" + ",".join(format_float(turn) for turn in t.turns))
            out.append(" ".join(fields))
        out.extend(
            f"cluster {cluster_id} {' '.join(members)}"
            for cluster_id, members in tiling.clusters.items()
        )
        return "\n".join(out) + "\n"


tlg_format = TlgFormat()
