"""
The ``.gpt`` partition format: one ``piece <id> <vertex-id>...`` line per piece.

A parsed file is a list of (piece id, vertex ids) in file order; combine it with a complex
through :meth:`GraphPartition.from_vertex_lists`.
"""

from typing import List, Tuple, Union

from conformal_type_lab.formats.base import TextFormat, tokenize
from conformal_type_lab.partitioner.subgraph import GraphPartition

PieceList = List[Tuple[str, Tuple[str, ...]]]


def partition_pieces(partition: GraphPartition) -> PieceList:
    return [(piece_id, tuple(piece.sorted_vertices())) for piece_id, piece in partition.items()]


class GptFormat(TextFormat[PieceList]):
    suffix = ".gpt"

    def parse(self, text: str, path: str = "<string>") -> PieceList:
        pieces: PieceList = []
        seen = set()
        for line in tokenize(text):
            if line.keyword != "piece":
                raise self.error(path, line, 0, f"unknown record {line.keyword!r}")
            self.expect_count(path, line, 3)
            piece_id = line.tokens[1].text
            if piece_id in seen:
                raise self.error(path, line, 1, f"duplicate piece {piece_id!r}")
            seen.add(piece_id)
            pieces.append((piece_id, tuple(token.text for token in line.tokens[2:])))
        self.logger.debug(f"Parsed {len(pieces)} pieces from {path}")
        return pieces

    def serialize(self, value: Union[PieceList, GraphPartition]) -> str:
        pieces = partition_pieces(value) if isinstance(value, GraphPartition) else value
        return "".join(f"piece {piece_id} {' '.join(members)}\n" for piece_id, members in pieces)


gpt_format = GptFormat()
