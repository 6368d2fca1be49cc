import logging

import pytest

from msmetric.core.instances import two_point_space
from msmetric.core.types import PhiFunction, SelfMap
from msmetric.fixedpoint import (
    ContractionKind,
    CycleDetectedError,
    IterationLimitError,
    enumerate_fixed_points,
    picard,
    theorem_harness,
)


class TestPicard:
    def setup_method(self):
        self.space = two_point_space()
        self.to_a = SelfMap.constant(self.space, "a")

    def test_reaches_fixed_point(self):
        trace = picard(self.space, self.to_a, "b")
        assert trace.orbit == ("b", "a", "a")
        assert trace.steps == 2
        assert trace.fixed_point == "a"
        assert trace.self_distance_at_fix == 0
        assert trace.step_gaps == (2, 0)
        assert trace.step_distances == (2, 0)
        assert trace.status == "fixed"

    def test_start_at_fixed_point(self):
        trace = picard(self.space, self.to_a, "a")
        assert trace.orbit == ("a", "a")
        assert trace.steps == 1

    def test_cycle(self, discrete3):
        swap = SelfMap.from_images(discrete3, ["2", "1", "3"])
        with pytest.raises(CycleDetectedError) as err:
            picard(discrete3, swap, "1")
        assert err.value.cycle == ("1", "2")
        assert err.value.trace.orbit == ("1", "2", "1")
        assert err.value.trace.status == "cycle"

    def test_iteration_limit(self, discrete3):
        chain = SelfMap.from_images(discrete3, ["2", "3", "3"])
        with pytest.raises(IterationLimitError) as err:
            picard(discrete3, chain, "1", max_iter=1)
        assert err.value.trace.orbit == ("1", "2")
        assert err.value.trace.status == "limit"
        assert picard(discrete3, chain, "1").fixed_point == "3"

    def test_bad_arguments(self, example, two_point):
        T = SelfMap.identity(example)
        with pytest.raises(ValueError):
            picard(example, T, "1", max_iter=0)
        with pytest.raises(KeyError):
            picard(example, T, "7")
        with pytest.raises(ValueError):
            picard(two_point, T, "a")

    def test_enumerate_fixed_points(self, discrete3):
        assert enumerate_fixed_points(discrete3, SelfMap.identity(discrete3)) == {"1", "2", "3"}
        assert enumerate_fixed_points(discrete3, SelfMap.from_images(discrete3, ["2", "1", "3"])) == {"3"}


class TestTheoremHarness:
    def test_banach_on_two_point(self, two_point):
        check = theorem_harness(two_point, SelfMap.constant(two_point, "a"), ContractionKind.BANACH)
        assert check.admissible
        assert check.fixed_points == ("a",)
        assert check.fixed_point == "a"
        assert check.self_distance_zero is True
        assert check.picard_reaches_fixed_point is True
        assert check.conclusions_hold
        assert len(check.traces) == 2

    def test_kannan_on_two_point(self, two_point):
        check = theorem_harness(two_point, SelfMap.constant(two_point, "a"), ContractionKind.KANNAN)
        assert check.conclusions_hold

    def test_phi_on_discrete(self, discrete3):
        check = theorem_harness(
            discrete3, SelfMap.constant(discrete3, "2"), ContractionKind.PHI, PhiFunction.parse("saturating:1")
        )
        assert check.headline_holds
        assert check.fixed_point == "2"

    def test_inadmissible_map_skips_conclusions(self, example):
        check = theorem_harness(example, SelfMap.identity(example), ContractionKind.BANACH)
        assert check.admissible is False
        assert check.unique_fixed_point is None
        assert check.traces == ()
        assert not check.conclusions_hold

    def test_no_warning_when_conclusions_hold(self, two_point, caplog):
        with caplog.at_level(logging.WARNING, logger="msmetric.fixedpoint.harness"):
            theorem_harness(two_point, SelfMap.constant(two_point, "a"), ContractionKind.BANACH)
        assert caplog.records == []
