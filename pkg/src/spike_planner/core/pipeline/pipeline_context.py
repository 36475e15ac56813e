from dataclasses import dataclass, field
from typing import List, Optional

from spike_planner.domain.environment import SymbolId
from spike_planner.domain.network import Network
from spike_planner.domain.results import AdaptationReport, PlanMode
from spike_planner.domain.sim_config import SimConfig
from spike_planner.domain.trace import ReplayTrace


@dataclass
class ReplayContext:
    """Shared state handed to every threshold processor of a planning run"""

    network: Network
    config: SimConfig
    mode: PlanMode

    # latest replay; None before replay 1
    trace: Optional[ReplayTrace] = None
    replay_index: int = 0
    target: Optional[SymbolId] = None

    reports: List[AdaptationReport] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    def add_report(self, report: AdaptationReport):
        self.reports.append(report)

    def add_error(self, error: str):
        self.errors.append(error)

    def require_trace(self) -> ReplayTrace:
        if self.trace is None:
            raise RuntimeError(f"no replay trace available at replay {self.replay_index}")
        return self.trace
