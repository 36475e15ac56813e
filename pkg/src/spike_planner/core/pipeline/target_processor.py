from spike_planner.config.logger import get_logger
from spike_planner.core.adaptation.rules import apply_target_rule
from spike_planner.core.ports.processor_chain import ThresholdProcessor
from spike_planner.domain.results import AdaptationReport, AdaptationRow, AdaptationRule
from spike_planner.domain.theta import ThetaState
from .pipeline_context import ReplayContext

logger = get_logger()


class TargetProcessor(ThresholdProcessor):
    """Marks the goal by lowering its threshold before the first replay"""

    def _process(self, thetas: ThetaState, context: ReplayContext) -> ThetaState:
        target = context.target
        if target is None:
            return thetas

        adapted = apply_target_rule(thetas, target, context.config)
        context.add_report(AdaptationReport(
            rule=AdaptationRule.TARGET,
            replay=context.replay_index,
            rows=(AdaptationRow(
                population=target.name,
                old_theta=thetas.of(target),
                new_theta=adapted.of(target),
                rule=AdaptationRule.TARGET,
                factor=context.config.lambda_target,
            ),),
        ))
        logger.info(f"Target {target.name}: theta {thetas.of(target):.4f} -> {adapted.of(target):.4f}")
        return adapted
