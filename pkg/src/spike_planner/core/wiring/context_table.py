from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from spike_planner.config.logger import get_logger
from spike_planner.domain.environment import EnvironmentSet
from spike_planner.domain.errors import CapacityError
from spike_planner.domain.network import ContextKey
from spike_planner.domain.sim_config import SimConfig

logger = get_logger()


@dataclass(frozen=True)
class ContextTable:
    """Contexts in order of first appearance, their successors and per-symbol counts"""

    contexts: Tuple[ContextKey, ...]
    successors: Mapping[ContextKey, Tuple[ContextKey, ...]]
    counts: Mapping[str, int]

    def count(self, symbol: str) -> int:
        return self.counts.get(symbol, 0)


def derive_contexts(envs: EnvironmentSet, config: SimConfig) -> ContextTable:
    """
    Map every (environment, sequence, position) occurrence to a ContextKey.

    Occurrences share a context iff they sit in the same environment behind the
    same prefix, so a branch point keeps one context that feeds every branch.

    Raises:
        CapacityError: if a symbol needs more than N neurons (contexts x rho)
    """
    order: Dict[ContextKey, None] = {}
    successors: Dict[ContextKey, Dict[ContextKey, None]] = {}

    for env_id, sequence in envs.sequences():
        previous = None
        for position, name in enumerate(sequence):
            key = ContextKey(environment=env_id, symbol=envs.symbol(name), prefix=tuple(sequence[:position + 1]))
            order.setdefault(key, None)
            successors.setdefault(key, {})
            if previous is not None:
                successors[previous].setdefault(key, None)
            previous = key

    counts: Dict[str, int] = {symbol.name: 0 for symbol in envs.symbols}
    for key in order:
        counts[key.symbol.name] += 1

    for name, count in counts.items():
        if count * config.rho > config.N:
            raise CapacityError(
                f"subpopulation '{name}' needs {count} contexts x rho={config.rho} = {count * config.rho} neurons, only N={config.N} available"
            )

    logger.debug(f"Derived {len(order)} contexts: {counts}")
    return ContextTable(
        contexts=tuple(order),
        successors={key: tuple(nexts) for key, nexts in successors.items()},
        counts=counts,
    )
