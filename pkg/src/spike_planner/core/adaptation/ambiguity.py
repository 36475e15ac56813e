from typing import Dict, Union

from spike_planner.domain.environment import EnvironmentSet, SymbolId
from spike_planner.domain.sim_config import SimConfig


def ambiguity(envs: EnvironmentSet, location: Union[SymbolId, str]) -> int:
    """Number of environments whose sequences contain the location"""
    name = envs.symbol(str(location)).name
    return sum(1 for environment in envs.environments if environment.contains(name))


def ambiguity_table(envs: EnvironmentSet) -> Dict[str, int]:
    return {symbol.name: ambiguity(envs, symbol) for symbol in envs.symbols}


def expected_active(alpha: int, config: SimConfig) -> int:
    """Distinct neurons a subpopulation of ambiguity alpha shows in the measurement replay"""
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    return alpha * config.rho
