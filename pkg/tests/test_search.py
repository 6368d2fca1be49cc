from fractions import Fraction

import pytest

from msmetric.axioms import AxiomId, check_partial_s, validate_ms
from msmetric.core.instances import discrete_space
from msmetric.fixedpoint import ContractionKind, analyze
from msmetric.search import (
    DEFAULT_GRID,
    EXHAUSTIVE_MAX_POINTS,
    GenConfig,
    find_ms_not_partial_s,
    gen_admissible_map,
    gen_ms,
    gen_partial_s,
    iter_admissible_maps,
    run_trials,
    trial_rng,
)


def _odd_trial(config, trial):
    return trial * 10 if trial % 2 else None


class TestGenConfig:
    def test_defaults(self):
        config = GenConfig()
        assert config.n == 3
        assert config.value_grid == DEFAULT_GRID
        assert config.ceiling == 10

    def test_grid_is_sorted_and_deduplicated(self):
        config = GenConfig.with_grid(["3", 1, "1", Fraction(1, 2)])
        assert config.value_grid == (Fraction(1, 2), 1, 3)
        assert config.ceiling == 3

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n": 1},
            {"n": 17},
            {"seed": -1},
            {"seed": 2**64},
            {"value_grid": ()},
            {"trials": -1},
            {"workers": 0},
            {"max_repair_rounds": -1},
        ],
    )
    def test_rejects_bad_settings(self, kwargs):
        with pytest.raises(ValueError):
            GenConfig(**kwargs)

    def test_replace(self):
        assert GenConfig().replace(seed=5).seed == 5


def test_trial_rng_is_deterministic():
    a = trial_rng(11, 3).integers(1000, size=8)
    b = trial_rng(11, 3).integers(1000, size=8)
    c = trial_rng(12, 2).integers(1000, size=8)
    assert a.tolist() == b.tolist() == c.tolist()


class TestRunTrials:
    def test_lowest_index_wins(self):
        assert run_trials(GenConfig(trials=10), _odd_trial) == (1, 10)

    def test_no_trials(self):
        assert run_trials(GenConfig(trials=0), _odd_trial) is None

    def test_worker_count_does_not_change_result(self):
        config = GenConfig(trials=40, workers=2)
        assert run_trials(config, _odd_trial) == (1, 10)


class TestGenerators:
    def test_gen_ms_output_is_ms(self):
        space = gen_ms(GenConfig(n=3, seed=1, trials=200))
        assert space is not None
        assert validate_ms(space).is_ms
        assert space.provenance["generator"] == "gen_ms"
        assert space.provenance["seed"] == 1
        assert space.name == f"gen-ms-n3-s1-t{space.provenance['trial']}"
        assert all(v in DEFAULT_GRID for v in space.table.values())

    def test_gen_ms_is_reproducible(self):
        config = GenConfig(n=4, seed=42, trials=200)
        first, second = gen_ms(config), gen_ms(config)
        assert first == second
        assert first.provenance == second.provenance

    def test_gen_ms_same_result_with_workers(self):
        config = GenConfig(n=3, seed=9, trials=64)
        assert gen_ms(config) == gen_ms(config.replace(workers=2))

    def test_gen_partial_s_output_passes_both(self):
        space = gen_partial_s(GenConfig(n=4, seed=3, trials=300))
        assert space is not None
        assert check_partial_s(space).is_partial_s
        assert validate_ms(space).is_ms

    def test_exhaustion_warns(self):
        with pytest.warns(UserWarning, match="no instance found in 0 trials"):
            assert gen_ms(GenConfig(trials=0)) is None

    def test_small_grid(self):
        space = gen_ms(GenConfig.with_grid([0, 1, 2, 3], n=2, seed=0, trials=200))
        assert space is not None
        assert max(space.table.values()) <= 3


class TestSeparationSearch:
    def test_injected_instance_is_reported_first(self, example, discrete3):
        found = find_ms_not_partial_s(GenConfig(trials=0), initial=[discrete3, example])
        assert found.injected
        assert found.trial == 1
        assert found.space is example
        assert found.witness.axiom is AxiomId.PS_iii
        assert found.witness.witness == ("1", "2", "3", "1")

    def test_injected_non_ms_instances_are_skipped(self, ms2_space):
        with pytest.warns(UserWarning):
            assert find_ms_not_partial_s(GenConfig(trials=0), initial=[ms2_space]) is None

    def test_generated_witness_is_consistent(self):
        found = find_ms_not_partial_s(GenConfig(n=3, seed=7, trials=2000))
        if found is None:
            pytest.skip("no separating instance in this budget")
        assert not found.injected
        assert validate_ms(found.space).is_ms
        assert not check_partial_s(found.space).is_partial_s


class TestAdmissibleMaps:
    def test_exhaustive_on_two_points(self, two_point):
        maps = list(iter_admissible_maps(two_point, ContractionKind.BANACH))
        assert [T.name for T in maps] == ["a->a"]

    def test_no_banach_map_on_example(self, example):
        assert gen_admissible_map(example, ContractionKind.BANACH) is None

    def test_phi_requires_function(self, two_point):
        with pytest.raises(ValueError):
            list(iter_admissible_maps(two_point, ContractionKind.PHI))

    def test_sampled_maps_on_larger_space(self):
        space = discrete_space(EXHAUSTIVE_MAX_POINTS + 1)
        maps = list(iter_admissible_maps(space, ContractionKind.BANACH, config=GenConfig(seed=3, trials=50)))
        assert len({T.images() for T in maps}) == len(maps)
        for T in maps:
            assert analyze(space, T, ContractionKind.BANACH).admissible
