import pytest

from conftest import make_envs
from spike_planner.core.oracle import symbol_graph
from spike_planner.core.wiring import build_network, derive_contexts
from spike_planner.domain import CapacityError, SimConfig


def test_context_counts_in_the_maze(maze_envs, path_config):
    table = derive_contexts(maze_envs, path_config)
    counts = {name: table.count(name) for name in "ABCDEFGHIJ"}
    # J is learned behind two different prefixes
    assert counts == {"A": 1, "B": 1, "C": 1, "D": 1, "E": 1, "F": 1, "G": 1, "H": 1, "I": 1, "J": 2}


def test_contexts_are_per_environment(three_world_envs, ambiguity_config):
    table = derive_contexts(three_world_envs, ambiguity_config)
    assert [table.count(name) for name in "ABCDEF"] == [3, 3, 3, 2, 1, 2]


def test_branch_point_context_feeds_both_branches(maze_envs, path_config):
    table = derive_contexts(maze_envs, path_config)
    c_context = next(context for context in table.contexts if context.prefix == ("A", "B", "C"))
    assert [successor.symbol.name for successor in table.successors[c_context]] == ["F", "D"]


def test_capacity_error_when_contexts_do_not_fit():
    envs = make_envs(*[(f"env{i}", [["A", "B"]]) for i in range(8)])
    with pytest.raises(CapacityError, match="subpopulation 'A'"):
        build_network(envs, SimConfig())


def test_each_context_owns_rho_distinct_neurons(maze_network, path_config):
    owners = {}
    for context in maze_network.contexts:
        neurons = maze_network.context_neurons[context]
        assert len(neurons) == path_config.rho
        for neuron in neurons:
            assert neuron not in owners
            owners[neuron] = context
            assert maze_network.population_of(neuron) == context.symbol


def test_full_product_between_consecutive_contexts(maze_network, maze_envs):
    b, c = maze_envs.symbol("B"), maze_envs.symbol("C")
    active_b = maze_network.population_neurons(b)
    active_c = maze_network.population_neurons(c)
    assert maze_network.connection_count(b, c, active_b, active_c) == 9
    assert maze_network.connection_count(c, b, active_c, active_b) == 0
    assert len(maze_network.synapses) == 9 * 10


def test_wiring_is_deterministic_for_a_seed(maze_envs, path_config):
    first = build_network(maze_envs, path_config)
    second = build_network(maze_envs, path_config)
    assert first.context_neurons == second.context_neurons
    reseeded = build_network(maze_envs, path_config.model_copy(update={'seed': 6}))
    assert reseeded.context_neurons != first.context_neurons


def test_symbol_projection_matches_oracle_graph(three_world_envs, ambiguity_config):
    network = build_network(three_world_envs, ambiguity_config)
    assert network.symbol_edges() == frozenset(symbol_graph(three_world_envs).edges())
