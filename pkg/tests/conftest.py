"""
Shared fixtures and hypothesis profiles.

Select a profile with HYPOTHESIS_PROFILE=dev|ci|thorough. Tests marked
``slow`` only run with ``--runslow``.
"""

import os

import hypothesis
import numpy as np
import pytest

from rhneat.agents import BudgetMeter, MeteredModel
from rhneat.games import get_game
from rhneat.neat import InnovationRegistry
from rhneat.types import NeatParams

hypothesis.settings.register_profile("dev", max_examples=50, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def params():
    return NeatParams()


@pytest.fixture
def registry():
    """Registry for 2-input, 1-output genomes"""
    return InnovationRegistry.for_shape(2, 1)


@pytest.fixture
def corridor():
    return get_game("corridor")


@pytest.fixture
def metered():
    """Factory: metered model over a game id with the given limit"""

    def make(game_id: str = "corridor", limit: int = 1000) -> MeteredModel:
        return MeteredModel(get_game(game_id), BudgetMeter(limit))

    return make
