from decimal import Decimal, localcontext

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import make_envs
from spike_planner.core.adaptation import adta_factor, apply_stdta, apply_target_rule
from spike_planner.core.engine import run_replay
from spike_planner.core.oracle import RandomEnvParams, bfs_shortest_path, gen_random_env, symbol_graph
from spike_planner.core.planner import concurrent_alternatives, plan_path
from spike_planner.core.wiring import build_network
from spike_planner.domain import AdtaMode, SimConfig, ThetaState

RANDOM_DAG_SEEDS = range(50)


def random_dag_params(seed: int) -> RandomEnvParams:
    # even seeds share a two-symbol prefix before the branches split
    return RandomEnvParams(depth=3, branches=1 + seed % 3, symbols=12, prefix=2 if seed % 2 == 0 else None)


def shared_prefix_length(envs) -> int:
    """Symbols every sequence shares before the branches split, start included"""
    sequences = [sequence for _, sequence in envs.sequences()]
    length = 0
    while all(len(sequence) > length and sequence[length] == sequences[0][length] for sequence in sequences):
        length += 1
    return length


@pytest.mark.parametrize("seed", RANDOM_DAG_SEEDS)
def test_planner_agrees_with_bfs_on_random_dags(seed, path_config):
    envs = gen_random_env(seed, random_dag_params(seed))
    result = plan_path(build_network(envs, path_config), "S", "T", path_config)
    expected = tuple(bfs_shortest_path(symbol_graph(envs), "S", "T"))

    assert result.converged
    assert result.path == expected
    assert result.replays_used <= 1 + concurrent_alternatives(result.traces[0], result.path)
    if shared_prefix_length(envs) >= 2:
        assert result.replays_used < len(expected) - 1


def _reference_literal_factor(n_act, n_total, rho, gamma_plus, gamma_minus, lambda_a) -> Decimal:
    with localcontext() as context:
        context.prec = 50
        gamma = Decimal(gamma_plus) if n_act >= rho else Decimal(gamma_minus)
        fraction_gap = Decimal(n_act) / Decimal(n_total) - Decimal(rho) / Decimal(n_total)
        return Decimal(lambda_a) * (gamma * fraction_gap).exp()


def test_literal_adta_factor_matches_high_precision_reference():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n_total = int(rng.integers(3, 61))
        rho = int(rng.integers(1, n_total + 1))
        n_act = int(rng.integers(1, n_total + 1))
        gamma_plus = float(rng.uniform(-20.0, -0.1))
        gamma_minus = float(rng.uniform(0.1, 40.0))
        lambda_a = float(rng.uniform(0.01, 1.0))
        config = SimConfig(N=n_total, rho=rho, gamma_plus=gamma_plus, gamma_minus=gamma_minus,
                           lambda_a=lambda_a, adta_mode=AdtaMode.LITERAL)

        factor = adta_factor(n_act, n_total, config)
        reference = _reference_literal_factor(n_act, n_total, rho, gamma_plus, gamma_minus, lambda_a)
        assert abs(Decimal(factor) - reference) / reference < Decimal("1e-12")


def test_multiplicative_rules_match_decimal_products():
    rng = np.random.default_rng(7)
    envs = make_envs(("env1", [["A", "B", "C"], ["A", "B", "D"]]))
    for _ in range(100):
        lambda_target = float(rng.uniform(0.05, 1.0))
        lambda_b = float(rng.uniform(0.05, 1.0))
        theta_init = float(rng.uniform(0.5, 10.0))
        config = SimConfig(lambda_target=lambda_target, lambda_b=lambda_b, theta_init=theta_init,
                           kappa=1.0, dt_max_b=200.0)
        network = build_network(envs, config)
        thetas = ThetaState.initial(len(envs.symbols), theta_init)

        targeted = apply_target_rule(thetas, envs.symbol("C"), config)
        adapted, _ = apply_stdta(thetas, run_replay(network, thetas, config), network, config)

        expected_target = Decimal(theta_init) * Decimal(lambda_target)
        expected_back = Decimal(theta_init) * Decimal(lambda_b)
        assert abs(Decimal(targeted.of(envs.symbol("C"))) - expected_target) / expected_target < Decimal("1e-12")
        assert abs(Decimal(adapted.of(envs.symbol("B"))) - expected_back) / expected_back < Decimal("1e-12")


@given(n_total=st.integers(min_value=4, max_value=60), data=st.data())
def test_complement_factor_increases_with_activity(n_total, data):
    rho = data.draw(st.integers(min_value=1, max_value=n_total - 2))
    n_act = data.draw(st.integers(min_value=rho, max_value=n_total - 1))
    complement = SimConfig(N=n_total, rho=rho, adta_mode=AdtaMode.COMPLEMENT)
    literal = SimConfig(N=n_total, rho=rho, adta_mode=AdtaMode.LITERAL)

    assert adta_factor(n_act, n_total, complement) < adta_factor(n_act + 1, n_total, complement)
    assert adta_factor(n_act, n_total, literal) > adta_factor(n_act + 1, n_total, literal)


MAZE = make_envs(("maze", [["A", "B", "C", "F", "H", "J"], ["A", "B", "C", "D", "E", "G", "I", "J"]]))
MAZE_NETWORK = build_network(MAZE, SimConfig())


@settings(max_examples=30, deadline=None)
@given(
    lambda_b=st.floats(min_value=0.05, max_value=1.0),
    dt_max_b=st.floats(min_value=1.0, max_value=120.0),
    theta_j=st.floats(min_value=3.0, max_value=6.5),
)
def test_thresholds_never_increase(lambda_b, dt_max_b, theta_j):
    config = SimConfig(lambda_b=lambda_b, dt_max_b=dt_max_b)
    thetas = ThetaState.initial(len(MAZE.symbols), 6.5)
    factors = [1.0] * len(MAZE.symbols)
    factors[MAZE.symbol("J").index] = theta_j / 6.5
    thetas = thetas.scaled(factors)

    adapted, report = apply_stdta(thetas, run_replay(MAZE_NETWORK, thetas, config), MAZE_NETWORK, config)
    assert all(0.0 < after <= before for before, after in zip(thetas.theta, adapted.theta))
    for row in report.rows:
        assert 0.0 < row.factor <= 1.0


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), branches=st.integers(min_value=1, max_value=3))
def test_generator_is_deterministic_for_any_seed(seed, branches):
    params = RandomEnvParams(depth=3, branches=branches)
    assert gen_random_env(seed, params) == gen_random_env(seed, params)
