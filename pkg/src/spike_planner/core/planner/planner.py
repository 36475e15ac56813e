from typing import List, Optional, Tuple, Union

from spike_planner.config.logger import get_logger
from spike_planner.core.engine.replay_engine import run_replay
from spike_planner.core.oracle.graph import bfs_shortest_path, symbol_graph
from spike_planner.core.pipeline.adta_processor import AdtaProcessor
from spike_planner.core.pipeline.pipeline_context import ReplayContext
from spike_planner.core.pipeline.stdta_processor import StdtaProcessor
from spike_planner.core.pipeline.target_processor import TargetProcessor
from spike_planner.core.ports.processor_chain import ThresholdProcessor
from spike_planner.core.validation import validate_config
from spike_planner.domain.environment import SymbolId
from spike_planner.domain.errors import AmbiguousActivityError, UnreachableTargetError
from spike_planner.domain.network import Network
from spike_planner.domain.results import PlanMode, PlanResult
from spike_planner.domain.sim_config import SimConfig
from spike_planner.domain.theta import ThetaState
from spike_planner.domain.trace import ReplayTrace
from .convergence import extract_path, has_converged

logger = get_logger()

Location = Union[SymbolId, str]


class ReplayPlanner:
    """
    Alternates replays with threshold adaptation until the activity pattern
    repeats, then reads the surviving chain off the last replay.
    """

    def __init__(self, network: Network, config: SimConfig):
        self.network = network
        self.config = validate_config(config)
        self.graph = symbol_graph(network.environments)

    def _symbol(self, location: Location) -> SymbolId:
        return self.network.environments.symbol(str(location))

    def _build_chain(self, mode: PlanMode) -> ThresholdProcessor:
        """Rules run after each replay, in order"""
        stdta = StdtaProcessor()
        if mode == PlanMode.DISAMBIGUATION:
            head = AdtaProcessor(measurement_replay=1)
            head.set_next(stdta)
            return head
        return stdta

    def plan_path(self, start: Location, target: Location) -> PlanResult:
        start_id, target_id = self._symbol(start), self._symbol(target)
        if not bfs_shortest_path(self.graph, start_id, target_id):
            raise UnreachableTargetError(start_id.name, target_id.name)

        logger.info(f"📊 Planning path {start_id.name} -> {target_id.name}")
        context = ReplayContext(network=self.network, config=self.config, mode=PlanMode.PATH_PLANNING, target=target_id)
        initial = ThetaState.initial(len(self.network.symbols), self.config.theta_init)
        thetas = TargetProcessor().process(initial, context)
        return self._run(context, start_id, initial, thetas)

    def disambiguate(self, start: Location) -> PlanResult:
        start_id = self._symbol(start)
        logger.info(f"📊 Disambiguating from {start_id.name}")
        context = ReplayContext(network=self.network, config=self.config, mode=PlanMode.DISAMBIGUATION)
        initial = ThetaState.initial(len(self.network.symbols), self.config.theta_init)
        return self._run(context, start_id, initial, initial)

    def _run(self, context: ReplayContext, start: SymbolId, initial: ThetaState, thetas: ThetaState) -> PlanResult:
        chain = self._build_chain(context.mode)
        goal = context.target.name if context.target is not None else None
        history: List[ThetaState] = []
        traces: List[ReplayTrace] = []
        replays_used: Optional[int] = None
        path: Tuple[str, ...] = ()
        stable = False

        for replay in range(1, self.config.max_replays + 1):
            thetas = thetas.at_replay(replay)
            trace = run_replay(self.network, thetas, self.config, start=start)
            history.append(thetas)
            traces.append(trace)
            logger.info(f"Replay {replay}: {len(trace.spiking_populations())} active subpopulations, "
                        f"{len(trace.events)} events")

            stable = len(traces) > 1 and has_converged(traces[-2], trace)
            if stable:
                try:
                    path = extract_path(traces[-2], self.graph, target=goal)
                    replays_used = replay - 1
                    break
                except AmbiguousActivityError as e:
                    # back-tracing may still be moving towards a branch point
                    logger.debug(f"Replay {replay} repeats the previous pattern but {e}, continuing")

            context.trace = trace
            context.replay_index = replay
            thetas = chain.process(thetas, context)

        diagnostics: List[str] = list(context.errors)
        converged = replays_used is not None
        if not converged:
            replays_used = len(traces)
            if not stable:
                message = f"no stable activity pattern within {self.config.max_replays} replays"
                logger.warning(f"⚠️ {message}")
                diagnostics.append(message)
            try:
                path = extract_path(traces[-1], self.graph, target=goal)
            except AmbiguousActivityError as e:
                logger.warning(f"⚠️ {e}")
                diagnostics.append(str(e))
                path = ()

        if context.mode == PlanMode.DISAMBIGUATION:
            goal = path[-1] if path else None

        result = PlanResult(
            mode=context.mode,
            start=start.name,
            path=path,
            target=goal,
            replays_used=replays_used,
            converged=converged,
            theta_history=tuple(history),
            traces=tuple(traces),
            reports=tuple(context.reports),
            initial_thetas=initial,
            diagnostics=tuple(diagnostics),
            populations=tuple(symbol.name for symbol in self.network.symbols),
        )
        if converged:
            logger.success(f"✅ Converged after {replays_used} replays: {' -> '.join(path)}")
        return result


def plan_path(network: Network, start: Location, target: Location, config: SimConfig) -> PlanResult:
    return ReplayPlanner(network, config).plan_path(start, target)


def disambiguate(network: Network, start: Location, config: SimConfig) -> PlanResult:
    return ReplayPlanner(network, config).disambiguate(start)
