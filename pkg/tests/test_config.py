import json

import pytest
from pydantic import ValidationError

from conftest import make_envs
from spike_planner.config.parse_and_convert_utils import read_structured_file
from spike_planner.core.validation import validate_config
from spike_planner.domain import (
    ConfigurationError,
    EnvironmentSet,
    RunManifest,
    RunMode,
    SimConfig,
    UnknownSymbolError,
)
from spike_planner.domain.sim_config import find_config_violation
from spike_planner.infrastructure.file_manager import FileManager


def test_defaults_match_parameter_table():
    config = SimConfig()
    assert (config.N, config.rho, config.theta_init) == (21, 3, 6.5)
    assert (config.lambda_target, config.lambda_b, config.lambda_a) == (0.8, 0.9, 0.2)
    assert (config.gamma_plus, config.gamma_minus) == (-8.0, 20.0)
    assert config.dt_max_b == 58.0
    assert config.adta_mode.value == "complement"


@pytest.mark.parametrize("update", [
    {'lambda_b': 1.5},
    {'lambda_target': 0.0},
    {'rho': 0},
    {'N': 2},
    {'dt_min_b': 10.0, 'dt_max_b': 5.0},
    {'kappa': 0.0},
    {'d_syn': 1.0},
    {'max_replays': 0},
])
def test_invalid_configs_are_rejected(update):
    with pytest.raises(ValidationError):
        SimConfig(**update)


def test_unknown_keys_are_rejected():
    with pytest.raises(ValidationError):
        SimConfig(beta=1.0)


def test_validate_config_names_the_field():
    broken = SimConfig.model_construct(**{**SimConfig().model_dump(), 'lambda_b': 1.5})
    with pytest.raises(ConfigurationError) as excinfo:
        validate_config(broken)
    assert excinfo.value.field == 'lambda_b'
    assert str(excinfo.value) == "lambda_b: rate out of (0,1]"


def test_empty_stdta_window_is_reported_on_dt_max():
    broken = SimConfig.model_construct(**{**SimConfig().model_dump(), 'dt_max_b': 0.0})
    assert find_config_violation(broken) == ('dt_max_b', "empty STDTA window")


def test_corrupted_verify_config_still_validates():
    config = SimConfig(lambda_b=1.0, dt_min_b=-1.0, dt_max_b=0.0)
    assert validate_config(config) is config


def test_load_toml_config_with_seed_override(experiments_dir):
    config = FileManager().load_config(experiments_dir / "ambiguity-02b.config.toml", seed=11)
    assert config.dt_max_b == 60.0
    assert config.seed == 11


def test_load_json_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({'N': 21, 'beta': 3}))
    with pytest.raises(ValidationError):
        FileManager().load_config(path)


def test_read_structured_file_rejects_other_formats(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("N: 21\n")
    with pytest.raises(ValueError):
        read_structured_file(path)


def test_symbols_are_indexed_by_first_appearance(maze_envs):
    names = [symbol.name for symbol in maze_envs.symbols]
    assert names == ["A", "B", "C", "F", "H", "J", "D", "E", "G", "I"]
    assert maze_envs.symbol("D").index == 6
    assert maze_envs.start.name == "A"


def test_unknown_symbol(maze_envs):
    with pytest.raises(UnknownSymbolError) as excinfo:
        maze_envs.symbol("Z")
    assert str(excinfo.value) == "unknown symbol 'Z'"


@pytest.mark.parametrize("environments", [
    (("env1", [["A"]]),),
    (("env1", [["A", "A", "B"]]),),
    (("env1", [["A", "B"]]), ("env2", [["B", "C"]])),
    (("env1", [["A", "B"]]), ("env1", [["A", "C"]])),
])
def test_invalid_environments(environments):
    with pytest.raises(ValidationError):
        make_envs(*environments)


def test_merge_keeps_indexing_stable(two_world_envs):
    extra = make_envs(("env3", [["A", "B", "C"], ["A", "B", "F"]]))
    merged = EnvironmentSet.merge([two_world_envs, extra])
    assert [environment.id for environment in merged.environments] == ["env1", "env2", "env3"]
    assert [symbol.name for symbol in merged.symbols] == [symbol.name for symbol in two_world_envs.symbols]


def test_environment_json_round_trip(tmp_path, two_world_envs):
    manager = FileManager()
    path = tmp_path / "envs.json"
    manager.save_environments(two_world_envs, path)
    assert manager.load_environments([path]) == two_world_envs


def test_config_json_round_trip(tmp_path):
    manager = FileManager()
    config = SimConfig(N=24, rho=4, dt_max_b=60.0, lambda_a=0.35, adta_mode="literal", max_replays=7, seed=42)
    path = tmp_path / "config.json"
    manager.save_config(config, path)

    assert manager.load_config(path) == config
    assert manager.load_config(path, seed=3) == config.model_copy(update={'seed': 3})


def test_plan_manifest_requires_target(tmp_path):
    with pytest.raises(ValidationError):
        RunManifest(config=tmp_path / "c.toml", environments=(tmp_path / "e.json",),
                    mode=RunMode.PLAN, start="A", output=tmp_path)


def test_manifest_paths_resolve_against_its_directory(experiments_dir):
    manifest = FileManager().load_manifest(experiments_dir / "path-planning.manifest.json")
    assert manifest.config == experiments_dir / "path-planning.config.toml"
    assert manifest.environments == (experiments_dir / "path-planning.env.json",)
    assert manifest.target == "J"
