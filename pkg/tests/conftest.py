from pathlib import Path

import pytest

from msmetric.core.instances import discrete_space, paper_example, two_point_space
from msmetric.core.types import MsSpace

DATASETS = Path(__file__).resolve().parent.parent / "datasets"


def pytest_addoption(parser):
    parser.addoption(
        "--skip-acceptance",
        action="store_true",
        default=False,
        help="Deselect the long seeded acceptance sweeps (marked 'acceptance').",
    )


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--skip-acceptance"):
        return

    deselected = [item for item in items if "acceptance" in item.keywords]
    if not deselected:
        return

    selected = [item for item in items if item not in deselected]
    config.hook.pytest_deselected(items=deselected)
    items[:] = selected


@pytest.fixture
def datasets_dir() -> Path:
    return DATASETS


@pytest.fixture
def example():
    return paper_example()


@pytest.fixture
def discrete3():
    return discrete_space(3)


@pytest.fixture
def two_point():
    return two_point_space()


@pytest.fixture
def ms2_space():
    return MsSpace.from_values(
        ["a", "b"],
        {("a", "a", "a"): 3, ("b", "b", "b"): 3, ("a", "a", "b"): 1, ("a", "b", "b"): 1},
        name="ms2",
    )


@pytest.fixture
def one_point():
    return MsSpace.from_values(["a"], {("a", "a", "a"): 0}, name="one")
