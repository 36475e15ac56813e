from pathlib import Path

import pytest

from spike_planner.core.wiring import build_network
from spike_planner.domain import Environment, EnvironmentSet, SimConfig

EXPERIMENTS = Path(__file__).resolve().parent.parent / "experiments"


def make_envs(*environments) -> EnvironmentSet:
    """make_envs(("env1", [["A", "B"], ...]), ...)"""
    return EnvironmentSet(environments=tuple(
        Environment(id=env_id, sequences=tuple(tuple(sequence) for sequence in sequences))
        for env_id, sequences in environments
    ))


@pytest.fixture
def experiments_dir() -> Path:
    return EXPERIMENTS


@pytest.fixture
def path_config() -> SimConfig:
    return SimConfig(dt_max_b=58.0)


@pytest.fixture
def ambiguity_config() -> SimConfig:
    return SimConfig(dt_max_b=55.0)


@pytest.fixture
def wide_window_config() -> SimConfig:
    return SimConfig(dt_max_b=60.0)


@pytest.fixture
def maze_envs() -> EnvironmentSet:
    return make_envs(("maze", [
        ["A", "B", "C", "F", "H", "J"],
        ["A", "B", "C", "D", "E", "G", "I", "J"],
    ]))


@pytest.fixture
def two_world_envs() -> EnvironmentSet:
    return make_envs(
        ("env1", [["A", "B", "C", "D"], ["A", "B", "C", "E"]]),
        ("env2", [["A", "B", "C", "D"], ["A", "B", "F"]]),
    )


@pytest.fixture
def three_world_envs() -> EnvironmentSet:
    return make_envs(
        ("env1", [["A", "B", "C", "D"], ["A", "B", "C", "E"]]),
        ("env2", [["A", "B", "C", "D"], ["A", "B", "F"]]),
        ("env3", [["A", "B", "C"], ["A", "B", "F"]]),
    )


@pytest.fixture
def maze_network(maze_envs, path_config):
    return build_network(maze_envs, path_config)
