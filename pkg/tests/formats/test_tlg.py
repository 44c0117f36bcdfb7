"""Tests for the .tlg tiling format."""

import math

import pytest

from conformal_type_lab.errors import ParseError
from conformal_type_lab.formats import tlg_format
from conformal_type_lab.tiling import Tiling

HEADER = "vertex a 1.0\nvertex b 1.0\nvertex c 1.0\n"
TRI = "tri t1 a b c 1.0 1.0 1.0 1.0 1.0 1.0"


class TestSerialize:
    """Canonical text of a tiling."""

    def test_flat_triangle(self, flat_triangle: Tiling) -> None:
        lines = tlg_format.serialize(flat_triangle).splitlines()
        third = repr(math.pi / 3)

        assert lines[0] == f"vertex a {repr(4 * math.pi)}"
        assert lines[3] == f"tri t1 a b c {third} {third} {third} 1.0 1.0 1.0 k=0.0"
        assert lines[4] == "cluster C1 t1"

    def test_reads_back(self, flat_strip: Tiling) -> None:
        assert tlg_format.parse(tlg_format.serialize(flat_strip)) == flat_strip

    def test_optional_fields(self) -> None:
        text = f"{HEADER}{TRI} k=1.0 omega=0.25 turns=0.5,0.0,-0.5\n"
        tiling = tlg_format.parse(text)
        triangle = tiling.triangle("t1")

        assert triangle.k == 1.0
        assert triangle.omega == 0.25
        assert triangle.turns == (0.5, 0.0, -0.5)
        assert tlg_format.serialize(tiling) == text

    def test_vertex_at_infinity(self) -> None:
        tiling = tlg_format.parse("vertex p inf\n")

        assert tiling.stored_total_angle("p") == math.inf
        assert tlg_format.serialize(tiling) == "vertex p inf\n"


class TestParse:
    """Errors with positions."""

    @pytest.mark.parametrize("text, line, column, message", [
        ("vertex a 0\n", 1, 10, "total angle must be positive"),
        ("vertex a\n", 1, 9, "'vertex' needs 2 fields"),
        ("vertex a 1\nvertex a 2\n", 2, 8, "duplicate vertex 'a'"),
        (f"{HEADER}tri t1 a b d 1.0 1.0 1.0 1.0 1.0 1.0 k=0\n", 4, 12, "unknown vertex 'd'"),
        (f"{HEADER}{TRI}\n", 4, 37, "'tri' needs 11 fields"),
        (f"{HEADER}{TRI} 0.0\n", 4, 38, "expected k=<number>, got '0.0'"),
        (f"{HEADER}tri t1 a b c inf 1.0 1.0 1.0 1.0 1.0 k=0\n", 4, 14,
         "infinity is not allowed here"),
        (f"{HEADER}tri t1 a b c nan 1.0 1.0 1.0 1.0 1.0 k=0\n", 4, 14,
         "expected a finite number"),
        (f"{HEADER}{TRI} k=0 turns=1,2\n", 4, 42, "expected three turns"),
        (f"{HEADER}{TRI} k=0 omega=1 omega=2\n", 4, 50, "unexpected field 'omega=2'"),
        (f"{HEADER}{TRI} k=0\n{TRI} k=0\n", 5, 5, "duplicate triangle 't1'"),
        (f"{HEADER}{TRI} k=0\ncluster C1 t1 t2\n", 5, 15, "unknown triangle 't2'"),
        (f"{HEADER}{TRI} k=0\ncluster C1 t1\ncluster C1 t1\n", 6, 9, "duplicate cluster"),
        ("tile t1\n", 1, 1, "unknown record 'tile'"),
    ])
    def test_errors(self, text: str, line: int, column: int, message: str) -> None:
        with pytest.raises(ParseError) as excinfo:
            tlg_format.parse(text, "bad.tlg")

        error = excinfo.value
        assert (error.line, error.column) == (line, column)
        assert message in error.message

    def test_empty_file_is_an_empty_tiling(self) -> None:
        tiling = tlg_format.parse("# nothing here\n")

        assert len(tiling) == 0
        assert tiling.vertex_ids == []


class TestFiles:
    """Reading and writing through the filesystem."""

    def test_write_and_read(self, tmp_path, flat_triangle: Tiling, capture_logs) -> None:
        path = tmp_path / "flat.tlg"
        caplog = capture_logs(tlg_format.logger)

        tlg_format.write(flat_triangle, path)
        assert tlg_format.read(path) == flat_triangle
        assert f"Wrote {path}" in caplog.text
        assert f"Read {path}" in caplog.text
