from spike_planner.core.adaptation.rules import apply_stdta
from spike_planner.core.ports.processor_chain import ThresholdProcessor
from spike_planner.domain.theta import ThetaState
from .pipeline_context import ReplayContext


class StdtaProcessor(ThresholdProcessor):
    def _process(self, thetas: ThetaState, context: ReplayContext) -> ThetaState:
        adapted, report = apply_stdta(
            thetas, context.require_trace(), context.network, context.config, replay=context.replay_index
        )
        context.add_report(report)
        return adapted
