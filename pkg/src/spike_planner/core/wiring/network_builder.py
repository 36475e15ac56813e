from typing import Dict, List, Tuple

import numpy as np

from spike_planner.config.logger import get_logger
from spike_planner.core.validation import validate_config
from spike_planner.domain.environment import EnvironmentSet
from spike_planner.domain.network import ContextKey, Network
from spike_planner.domain.sim_config import SimConfig
from .context_table import derive_contexts

logger = get_logger()


class NetworkBuilder:
    """Deterministic stand-in for sequence training: allocates context neurons and wires them"""

    def __init__(self, config: SimConfig):
        self.config = validate_config(config)

    def build(self, envs: EnvironmentSet) -> Network:
        table = derive_contexts(envs, self.config)
        neurons = self._allocate_neurons(envs, table.contexts)

        synapses: List[Tuple[int, int]] = []
        for context in table.contexts:
            for successor in table.successors[context]:
                # full bipartite product between consecutive contexts
                synapses.extend((pre, post) for pre in neurons[context] for post in neurons[successor])

        network = Network(
            environments=envs,
            n_per_population=self.config.N,
            rho=self.config.rho,
            start=envs.start,
            contexts=table.contexts,
            context_neurons=neurons,
            synapses=tuple(synapses),
        )
        logger.info(
            f"Built network: {len(envs.symbols)} subpopulations, {len(table.contexts)} contexts, {len(synapses)} synapses"
        )
        return network

    def _allocate_neurons(self, envs: EnvironmentSet, contexts) -> Dict[ContextKey, Tuple[int, ...]]:
        """Shuffle each subpopulation's slots with the configured seed, then hand out rho slots per context"""
        rng = np.random.default_rng(self.config.seed)
        size, rho = self.config.N, self.config.rho
        allocation: Dict[ContextKey, Tuple[int, ...]] = {}

        for symbol in envs.symbols:
            slots = rng.permutation(size)
            owned = [context for context in contexts if context.symbol == symbol]
            for position, context in enumerate(owned):
                chosen = slots[position * rho:(position + 1) * rho]
                allocation[context] = tuple(int(symbol.index * size + slot) for slot in chosen)
        return allocation


def build_network(envs: EnvironmentSet, config: SimConfig) -> Network:
    return NetworkBuilder(config).build(envs)
