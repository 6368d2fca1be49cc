"""Seeded end-to-end sweeps over generated instances.

These are the slow checks; deselect them with ``pytest --skip-acceptance``.
"""

import warnings
from collections import Counter

import pytest

from msmetric.axioms import AxiomId, check_partial_s, classify, replay_violation, validate_ms
from msmetric.cli.formats import parse_instance, serialize_instance
from msmetric.cli.main import main
from msmetric.core.instances import BUILTINS, paper_example
from msmetric.core.types import PhiFunction
from msmetric.fixedpoint import ContractionKind, enumerate_fixed_points, theorem_harness
from msmetric.search import GenConfig, find_ms_not_partial_s, gen_ms, gen_partial_s, iter_admissible_maps
from msmetric.topology import lemma1_sweep

pytestmark = pytest.mark.acceptance

HARNESS_TARGET = 500
HARNESS_MAX_SEEDS = 5000
PHIS = ("linear:1/4", "linear:1/2", "saturating:1")


def _quiet(fn, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        return fn(*args, **kwargs)


def test_example_reproduction():
    space = paper_example()
    report = validate_ms(space)
    assert report.is_ms and not report.violations
    assert report.checks_performed == 58
    c = classify(space)
    assert c.is_partial_s is False
    assert c.witness.axiom is AxiomId.PS_iii
    assert (c.witness.lhs, c.witness.rhs) == (8, 6)


def test_partial_s_generator_outputs_are_ms():
    collected = 0
    trial_seed = 0
    while collected < 1000:
        config = GenConfig(n=2 + collected % 5, seed=trial_seed, trials=200)
        trial_seed += 1
        space = _quiet(gen_partial_s, config)
        if space is None:
            continue
        assert check_partial_s(space).is_partial_s
        assert validate_ms(space).is_ms
        collected += 1


def test_separating_instance_is_found():
    found = find_ms_not_partial_s(GenConfig(n=3, seed=7, trials=10000))
    assert found is not None
    assert validate_ms(found.space).is_ms
    assert replay_violation(found.space, found.witness)


def _harness_pairs():
    kinds = [(ContractionKind.BANACH, None), (ContractionKind.KANNAN, None)]
    kinds += [(ContractionKind.PHI, PhiFunction.parse(p)) for p in PHIS]
    counts = Counter()
    for seed in range(HARNESS_MAX_SEEDS):
        if all(counts[str(phi or kind.value)] >= HARNESS_TARGET for kind, phi in kinds):
            break
        config = GenConfig.with_grid([0, 1, 2, 3], n=2 + seed % 3, seed=seed, trials=100)
        space = _quiet(gen_ms, config)
        if space is None:
            continue
        for kind, phi in kinds:
            for T in iter_admissible_maps(space, kind, phi):
                counts[str(phi or kind.value)] += 1
                yield space, T, kind, phi
    assert all(counts[str(phi or kind.value)] >= HARNESS_TARGET for kind, phi in kinds), counts


def test_fixed_point_theorems_hold_on_generated_pairs():
    checked = 0
    for space, T, kind, phi in _harness_pairs():
        check = theorem_harness(space, T, kind, phi)
        assert check.admissible
        assert check.unique_fixed_point, (space, T, kind)
        assert check.self_distance_zero, (space, T, kind)
        assert check.picard_reaches_fixed_point, (space, T, kind)
        assert {trace.fixed_point for trace in check.traces} == enumerate_fixed_points(space, T)
        checked += 1
    assert checked >= 5 * HARNESS_TARGET


def test_lemma_inequality_on_validated_instances():
    spaces = [factory() for factory in BUILTINS.values()]
    seed = 0
    generated = 0
    while generated < 100:
        space = _quiet(gen_ms, GenConfig(n=2 + generated % 7, seed=seed, trials=200))
        seed += 1
        if space is None:
            continue
        spaces.append(space)
        generated += 1
    for space in spaces:
        if space.name != "hierarchy-gap":
            assert validate_ms(space).is_ms
        sweep = lemma1_sweep(space)
        assert sweep.holds, (space.name, sweep.first_failure)


def test_round_trip_on_generated_instances():
    seed = 0
    done = 0
    while done < 1000:
        space = _quiet(gen_ms, GenConfig(n=2 + seed % 4, seed=seed, trials=50))
        seed += 1
        if space is None:
            continue
        assert parse_instance(serialize_instance(space)) == space
        done += 1


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--size", "4", "--seed", "5", "--trials", "200"],
        ["gen", "--partial-s", "--size", "3", "--seed", "5", "--trials", "200"],
        ["search", "--size", "3", "--seed", "7", "--trials", "10000"],
    ],
)
def test_cli_reruns_are_byte_identical(argv, tmp_path):
    first, second = tmp_path / "a.msspace", tmp_path / "b.msspace"
    assert main(argv + ["--out", str(first)]) == 0
    assert main(argv + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
