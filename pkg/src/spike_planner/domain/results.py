from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from .theta import ThetaState
from .trace import ReplayTrace


class AdaptationRule(str, Enum):
    INIT = "init"
    TARGET = "target"
    STDTA = "stdta"
    ADTA = "adta"
    NONE = "none"


class PlanMode(str, Enum):
    PATH_PLANNING = "path_planning"
    DISAMBIGUATION = "disambiguation"


@dataclass(frozen=True)
class AdaptationRow:
    population: str
    old_theta: float
    new_theta: float
    rule: AdaptationRule
    factor: float = 1.0
    n_act: int = 0
    # (successor, delta t) pairs measured for this subpopulation
    delta_ts: Tuple[Tuple[str, float], ...] = ()


@dataclass(frozen=True)
class AdaptationReport:
    """What one threshold rule did after (or before) a replay"""

    rule: AdaptationRule
    replay: int
    rows: Tuple[AdaptationRow, ...]

    def updated(self) -> Tuple[AdaptationRow, ...]:
        return tuple(row for row in self.rows if row.rule != AdaptationRule.NONE)

    def updated_populations(self) -> Tuple[str, ...]:
        return tuple(row.population for row in self.updated())


@dataclass(frozen=True)
class PlanResult:
    mode: PlanMode
    start: str
    path: Tuple[str, ...]
    target: Optional[str]
    replays_used: int
    converged: bool
    # thresholds in force during replay r are theta_history[r - 1]
    theta_history: Tuple[ThetaState, ...]
    traces: Tuple[ReplayTrace, ...]
    reports: Tuple[AdaptationReport, ...] = ()
    initial_thetas: Optional[ThetaState] = None
    diagnostics: Tuple[str, ...] = field(default=())
    # subpopulation names in symbol index order
    populations: Tuple[str, ...] = ()

    @property
    def final_trace(self) -> ReplayTrace:
        return self.traces[self.replays_used - 1]
