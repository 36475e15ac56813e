from dataclasses import dataclass
from typing import Sequence, Tuple

from .environment import SymbolId


@dataclass(frozen=True)
class ThetaState:
    """Per-subpopulation firing thresholds, indexed by SymbolId.index"""

    theta: Tuple[float, ...]
    replay_index: int = 0

    def __post_init__(self):
        if any(not value > 0.0 for value in self.theta):
            raise ValueError(f"thresholds must stay > 0, got {self.theta}")

    @classmethod
    def initial(cls, size: int, theta_init: float) -> 'ThetaState':
        return cls(theta=(float(theta_init),) * size, replay_index=0)

    def __len__(self) -> int:
        return len(self.theta)

    def of(self, symbol: SymbolId) -> float:
        return self.theta[symbol.index]

    def scaled(self, factors: Sequence[float]) -> 'ThetaState':
        """Multiply entry-wise by factors (same length), keep the replay index"""
        if len(factors) != len(self.theta):
            raise ValueError(f"expected {len(self.theta)} factors, got {len(factors)}")
        return ThetaState(theta=tuple(value * factor for value, factor in zip(self.theta, factors)),
                          replay_index=self.replay_index)

    def at_replay(self, replay_index: int) -> 'ThetaState':
        return ThetaState(theta=self.theta, replay_index=replay_index)
