"""Tests for the exact audits of the growth record."""

import dataclasses
from fractions import Fraction

import pytest

from conformal_type_lab.errors import PreconditionFailed, StageMissing
from conformal_type_lab.example_factory import (
    GrowthRecord, build, combinatorial_euler_audit, module_lower_bound, radius_growth_audit,
    riemann_hurwitz_audit,)


@pytest.fixture(scope="module")
def record() -> GrowthRecord:
    return build(1.0, 3)


@pytest.fixture(scope="module")
def slack_record() -> GrowthRecord:
    return build(1.0, 2, radius_slack=Fraction(1, 2))


class TestModuleAndRadius:
    """Annulus modules grow like n."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_module_lower_bound(self, record: GrowthRecord, n: int) -> None:
        assert module_lower_bound(record, n) == n

    def test_module_with_slack(self, slack_record: GrowthRecord) -> None:
        assert module_lower_bound(slack_record, 2) == 3

    def test_module_of_missing_stage(self, record: GrowthRecord) -> None:
        with pytest.raises(StageMissing):
            module_lower_bound(record, 4)

    def test_module_below_n(self, record: GrowthRecord) -> None:
        stage = record.stage(2)
        flat = dataclasses.replace(stage, next_log_radius=stage.log_radius)
        shrunk = dataclasses.replace(record, stages=(record.stage(1), flat))

        with pytest.raises(PreconditionFailed):
            module_lower_bound(shrunk, 2)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_radius_growth_is_tight(self, record: GrowthRecord, n: int) -> None:
        audit = radius_growth_audit(record, n)

        assert audit.holds
        assert audit.tight

    def test_radius_growth_with_slack(self, slack_record: GrowthRecord) -> None:
        audit = radius_growth_audit(slack_record, 1)

        assert audit.holds
        assert not audit.tight


class TestEulerCharacteristic:
    """The surface over each disk is itself a disk."""

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_riemann_hurwitz(self, record: GrowthRecord, n: int) -> None:
        audit = riemann_hurwitz_audit(record, n)

        assert audit.euler_char == 1
        assert audit.sheets == audit.branch_count + 1

    def test_riemann_hurwitz_values(self, record: GrowthRecord) -> None:
        audit = riemann_hurwitz_audit(record, 2)

        assert audit.branch_count == 3 + 3 * 2 ** 75
        assert audit.sheets == record.stage(2).sheets

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_combinatorial_euler(self, record: GrowthRecord, n: int) -> None:
        assert combinatorial_euler_audit(record, n).euler_char == 1

    def test_first_stage_counts(self, record: GrowthRecord) -> None:
        audit = combinatorial_euler_audit(record, 1)
        fans = 3 * 2 ** 75

        assert audit.vertices == 3 + fans
        assert audit.edges == 3 + 2 * fans + 3
        assert audit.faces == 1 + fans + 3

    def test_stage_zero_is_the_first_triangle(self, record: GrowthRecord) -> None:
        audit = combinatorial_euler_audit(record, 0)

        assert (audit.vertices, audit.edges, audit.faces) == (3, 3, 1)
        assert riemann_hurwitz_audit(record, 0).sheets == 1

    def test_inconsistent_sheet_count_fails(self, record: GrowthRecord) -> None:
        stage = record.stage(2)
        extra_sheet = dataclasses.replace(stage, sheets=stage.sheets + 1)
        tampered = dataclasses.replace(
            record, stages=(record.stage(1), extra_sheet, record.stage(3)))

        assert riemann_hurwitz_audit(tampered, 2).euler_char == 2
        assert combinatorial_euler_audit(tampered, 2).euler_char == 2
        assert riemann_hurwitz_audit(tampered, 1).euler_char == 1

    @pytest.mark.parametrize("n", [-1, 4])
    def test_missing_stage(self, record: GrowthRecord, n: int) -> None:
        with pytest.raises(StageMissing):
            riemann_hurwitz_audit(record, n)
        with pytest.raises(StageMissing):
            combinatorial_euler_audit(record, n)
