from spike_planner.core.adaptation.rules import apply_adta
from spike_planner.core.ports.processor_chain import ThresholdProcessor
from spike_planner.domain.theta import ThetaState
from .pipeline_context import ReplayContext


class AdtaProcessor(ThresholdProcessor):
    """Ambiguity-dependent update, only after the measurement replay"""

    def __init__(self, measurement_replay: int = 1):
        super().__init__()
        self.measurement_replay = measurement_replay

    def _process(self, thetas: ThetaState, context: ReplayContext) -> ThetaState:
        if context.replay_index != self.measurement_replay:
            return thetas

        adapted, report = apply_adta(
            thetas, context.require_trace(), context.network, context.config, replay=context.replay_index
        )
        context.add_report(report)
        return adapted
