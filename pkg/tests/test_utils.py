"""Tests for logging setup and id/number helpers."""

import logging
import math
from fractions import Fraction

import pytest

from conformal_type_lab.utils import (
    create_logger, format_half_perimeter, fraction_to_dict, natural_key, parse_half_perimeter,
    set_log_level, sorted_ids, to_fraction,)


class TestLogging:
    """Loggers write to stderr and optionally to a file."""

    def test_create_logger(self) -> None:
        logger = create_logger("conformal_type_lab.tests.console", logging.WARNING)

        assert logger.level == logging.WARNING
        assert not logger.propagate
        assert len(logger.handlers) == 1

    def test_recreating_replaces_handlers(self) -> None:
        create_logger("conformal_type_lab.tests.twice")
        logger = create_logger("conformal_type_lab.tests.twice")

        assert len(logger.handlers) == 1

    def test_log_file(self, tmp_path) -> None:
        path = tmp_path / "logs" / "run.log"
        logger = create_logger("conformal_type_lab.tests.file", log_file=str(path))

        logger.info("written to file")
        for handler in logger.handlers:
            handler.flush()

        assert "written to file" in path.read_text()
        for handler in logger.handlers:
            handler.close()

    def test_set_log_level(self) -> None:
        ours = create_logger("conformal_type_lab.tests.level", logging.INFO)
        other = create_logger("elsewhere.tests.level", logging.INFO)

        set_log_level(logging.ERROR)

        assert ours.level == logging.ERROR
        assert other.level == logging.INFO
        set_log_level(logging.INFO)


class TestIds:
    """Natural ordering of vertex and triangle ids."""

    def test_natural_order(self) -> None:
        assert sorted_ids(["v10", "v2", "c1", "v1"]) == ["c1", "v1", "v2", "v10"]
        assert sorted_ids(["x0", "c0", "c10", "c9"]) == ["c0", "c9", "c10", "x0"]

    def test_mixed_ids_compare(self) -> None:
        assert natural_key("12") < natural_key("a")
        assert sorted_ids(["v1.10", "v1.2", "v1"]) == ["v1", "v1.2", "v1.10"]


class TestNumbers:
    """Half-perimeter tokens and exact rationals."""

    @pytest.mark.parametrize("token, expected", [("1", 1), ("7", 7), ("inf", math.inf),
                                                 ("∞", math.inf)])
    def test_parse_half_perimeter(self, token: str, expected) -> None:
        assert parse_half_perimeter(token) == expected

    @pytest.mark.parametrize("token", ["0", "-2", "two", "2.5"])
    def test_bad_half_perimeter(self, token: str) -> None:
        with pytest.raises(ValueError):
            parse_half_perimeter(token)

    def test_format_half_perimeter(self) -> None:
        assert [format_half_perimeter(m) for m in (3, math.inf)] == ["3", "inf"]

    def test_fractions(self) -> None:
        assert to_fraction(" 1/3 ") == Fraction(1, 3)
        assert to_fraction("0.25") == Fraction(1, 4)
        assert to_fraction(0.5) == Fraction(1, 2)
        assert fraction_to_dict(Fraction(-2, 4)) == {"num": -1, "den": 2}
        assert fraction_to_dict(3) == {"num": 3, "den": 1}
        assert fraction_to_dict(None) is None
