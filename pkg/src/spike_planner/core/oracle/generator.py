"""
Seeded random environments for property tests.

Instances are layered DAGs: a shared prefix starting at the start symbol,
`branches` parallel branches of random interior length, and a common target.
Branch lengths are resampled until the shortest one is unique, so every
instance has exactly one shortest path.
"""
from typing import List, Optional

import networkx as nx
import numpy as np
from pydantic import Field, model_validator

from spike_planner.config.logger import get_logger
from spike_planner.domain.base import FrozenModel
from spike_planner.domain.environment import Environment, EnvironmentSet
from spike_planner.domain.errors import GenerationError
from .graph import symbol_graph

logger = get_logger()

MAX_ATTEMPTS = 200
START_SYMBOL = "S"
TARGET_SYMBOL = "T"


class RandomEnvParams(FrozenModel):
    # longest possible branch interior
    depth: int = Field(..., ge=1)
    branches: int = Field(..., ge=1)
    # upper bound on the number of distinct symbols
    symbols: int = Field(12, ge=3)
    # fixed prefix length including the start symbol, random when None
    prefix: Optional[int] = Field(None, ge=1)

    @model_validator(mode='after')
    def check_room(self) -> 'RandomEnvParams':
        smallest = (self.prefix or 1) + self.branches + 1
        if smallest > self.symbols:
            raise ValueError(f"{self.branches} branches need at least {smallest} symbols, budget is {self.symbols}")
        return self


def _names(prefix: int, lengths: List[int]) -> List[List[str]]:
    head = [START_SYMBOL] + [f"P{position}" for position in range(1, prefix)]
    return [
        head + [f"B{branch}_{position}" for position in range(1, length + 1)] + [TARGET_SYMBOL]
        for branch, length in enumerate(lengths)
    ]


def _has_unique_shortest_path(envs: EnvironmentSet) -> bool:
    graph = symbol_graph(envs)
    lengths = [len(path) for path in nx.all_simple_paths(graph, START_SYMBOL, TARGET_SYMBOL)]
    return bool(lengths) and lengths.count(min(lengths)) == 1


def gen_random_env(seed: int, params: RandomEnvParams) -> EnvironmentSet:
    """
    Raises:
        GenerationError: no valid instance within MAX_ATTEMPTS draws
    """
    rng = np.random.default_rng(seed)

    for attempt in range(1, MAX_ATTEMPTS + 1):
        lengths = [int(length) for length in rng.integers(1, params.depth + 1, size=params.branches)]
        if params.branches > 1 and lengths.count(min(lengths)) > 1:
            continue

        room = params.symbols - sum(lengths) - 1
        if params.prefix is not None:
            prefix = params.prefix
        elif room >= 1:
            prefix = int(rng.integers(1, room + 1))
        else:
            continue
        if prefix > room:
            continue

        envs = EnvironmentSet(environments=(
            Environment(id="env0", sequences=tuple(tuple(sequence) for sequence in _names(prefix, lengths))),
        ))
        if _has_unique_shortest_path(envs):
            logger.debug(f"Random environment seed={seed}: prefix {prefix}, branch lengths {lengths} (attempt {attempt})")
            return envs

    raise GenerationError(f"no instance with a unique shortest path after {MAX_ATTEMPTS} attempts (seed={seed}, {params})")
