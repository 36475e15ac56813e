"""
Event-driven replay of a trained network.

One replay starts with an external stimulus to every context neuron of the
start subpopulation and runs until the event queue is empty:

- presynaptic somatic spikes reach their targets after d_syn;
- rho arrivals inside w_coinc trigger a dendritic plateau;
- a plateau schedules a somatic spike after kappa * theta of the subpopulation;
- a somatic spike drives the local inhibitory neuron (d_inh later), which
  drives the global inhibitory neuron (another d_inh later, refractory t_ref_inh);
- a global inhibitory spike cancels pending spikes of peers that plateaued
  before it and would fire within w_inh after it.
"""
import heapq
from collections import deque
from dataclasses import dataclass
from itertools import count
from typing import Deque, Dict, List, Optional, Set, Tuple

from spike_planner.config.logger import get_logger
from spike_planner.domain.environment import SymbolId
from spike_planner.domain.errors import ConfigurationError, RunawayActivityError
from spike_planner.domain.network import Network
from spike_planner.domain.sim_config import SimConfig
from spike_planner.domain.theta import ThetaState
from spike_planner.domain.trace import Event, EventKind, KIND_PRIORITY, PopulationSummary, ReplayTrace

logger = get_logger()

_SPIKE = "spike"
_ARRIVAL = "arrival"
_LOCAL = "local"
_GLOBAL = "global"

_QUEUE_PRIORITY = {
    _SPIKE: KIND_PRIORITY[EventKind.SOMATIC_SPIKE],
    _ARRIVAL: KIND_PRIORITY[EventKind.DENDRITIC_PLATEAU],
    _LOCAL: KIND_PRIORITY[EventKind.LOCAL_INHIBITION],
    _GLOBAL: KIND_PRIORITY[EventKind.GLOBAL_INHIBITION],
}


def somatic_latency(theta: float, config: SimConfig) -> float:
    """Delay between a dendritic plateau and the somatic spike it causes (kappa * theta)"""
    if not theta > 0.0:
        raise ConfigurationError(f"threshold must be > 0, got {theta}", field='theta')
    return config.kappa * theta


@dataclass
class _PendingSpike:
    plateau: float
    scheduled: float


class ReplayEngine:
    """Runs a single replay; holds no state shared between instances"""

    def __init__(self, network: Network, thetas: ThetaState, config: SimConfig,
                 start: Optional[SymbolId] = None, spike_limit: Optional[int] = None):
        if len(thetas) != len(network.symbols):
            raise ConfigurationError(
                f"expected {len(network.symbols)} thresholds, got {len(thetas)}", field='theta'
            )
        self.network = network
        self.thetas = thetas
        self.config = config
        self.start = start or network.start
        self.spike_limit = spike_limit or network.neuron_count

        self._queue: List[tuple] = []
        self._sequence = count()
        self._events: List[Event] = []
        self._pending: Dict[int, _PendingSpike] = {}
        self._arrivals: Dict[int, Deque[float]] = {}
        self._plateaued: Set[int] = set()
        self._spiked: Dict[int, float] = {}
        self._spike_attempts = 0
        self._local_scheduled: Set[Tuple[int, float]] = set()
        self._cancelled_populations: Set[str] = set()
        self._last_global: Optional[float] = None

    def run(self) -> ReplayTrace:
        for neuron in sorted(self.network.population_neurons(self.start)):
            self._record(0.0, EventKind.EXTERNAL_STIMULUS, neuron)
            self._push(0.0, _SPIKE, neuron, True)

        while self._queue:
            time, _, key, _, tag, payload = heapq.heappop(self._queue)
            if tag == _SPIKE:
                self._on_spike(time, key, payload)
            elif tag == _ARRIVAL:
                self._on_arrival(time, key)
            elif tag == _LOCAL:
                self._on_local_inhibition(time, payload)
            else:
                self._on_global_inhibition(time)

        trace = self._build_trace()
        logger.debug(
            f"Replay finished: {len(self._spiked)} spiking neurons, "
            f"{len(trace.events_of(EventKind.CANCELLATION))} cancellations"
        )
        return trace

    def _push(self, time: float, tag: str, key: int, payload=None):
        heapq.heappush(self._queue, (time, _QUEUE_PRIORITY[tag], key, next(self._sequence), tag, payload))

    def _record(self, time: float, kind: EventKind, neuron: int,
                population: Optional[str] = None, trigger_time: Optional[float] = None):
        if population is None and neuron >= 0:
            population = self.network.population_of(neuron).name
        self._events.append(Event(time=time, kind=kind, neuron=neuron, population=population, trigger_time=trigger_time))

    def _on_spike(self, time: float, neuron: int, external: bool):
        self._spike_attempts += 1
        if self._spike_attempts > self.spike_limit:
            raise RunawayActivityError(
                f"{self._spike_attempts} somatic spikes exceed the {self.spike_limit} neurons of the network, check the timing parameters"
            )
        if not external:
            pending = self._pending.get(neuron)
            if pending is None or pending.scheduled != time:
                return
            del self._pending[neuron]
        if neuron in self._spiked:
            return

        self._record(time, EventKind.SOMATIC_SPIKE, neuron)
        self._spiked[neuron] = time

        for target in self.network.fanout(neuron):
            self._push(time + self.config.d_syn, _ARRIVAL, target)

        population = neuron // self.network.n_per_population
        if (population, time) not in self._local_scheduled:
            self._local_scheduled.add((population, time))
            self._push(time + self.config.d_inh, _LOCAL, population, population)

    def _on_arrival(self, time: float, neuron: int):
        if neuron in self._plateaued or neuron in self._spiked:
            return
        window = self._arrivals.setdefault(neuron, deque())
        window.append(time)
        while window and time - window[0] > self.config.w_coinc:
            window.popleft()
        if len(window) < self.network.rho:
            return

        self._plateaued.add(neuron)
        self._record(time, EventKind.DENDRITIC_PLATEAU, neuron)
        symbol = self.network.population_of(neuron)
        scheduled = time + somatic_latency(self.thetas.of(symbol), self.config)
        self._pending[neuron] = _PendingSpike(plateau=time, scheduled=scheduled)
        self._push(scheduled, _SPIKE, neuron, False)

    def _on_local_inhibition(self, time: float, population: int):
        self._record(time, EventKind.LOCAL_INHIBITION, -1, population=self.network.symbols[population].name)
        self._push(time + self.config.d_inh, _GLOBAL, -1)

    def _on_global_inhibition(self, time: float):
        # one global inhibitory spike per concurrent wave
        if self._last_global is not None and time - self._last_global < self.config.t_ref_inh:
            return
        self._last_global = time
        self._record(time, EventKind.GLOBAL_INHIBITION, -1)

        horizon = time + self.config.w_inh
        for neuron in sorted(self._pending):
            pending = self._pending[neuron]
            if pending.plateau < time < pending.scheduled <= horizon:
                del self._pending[neuron]
                self._record(time, EventKind.CANCELLATION, neuron, trigger_time=time)
                self._cancelled_populations.add(self.network.population_of(neuron).name)
                logger.debug(f"Global inhibition at {time:.3f} ms cancels neuron {neuron} (was due at {pending.scheduled:.3f} ms)")

    def _build_trace(self) -> ReplayTrace:
        events = tuple(sorted(self._events, key=Event.sort_key))

        first: Dict[str, float] = {}
        neurons: Dict[str, Set[int]] = {}
        for neuron, time in self._spiked.items():
            name = self.network.population_of(neuron).name
            neurons.setdefault(name, set()).add(neuron)
            if name not in first or time < first[name]:
                first[name] = time

        summaries = {}
        for symbol in self.network.symbols:
            name = symbol.name
            if name in first or name in self._cancelled_populations:
                summaries[name] = PopulationSummary(
                    population=name,
                    first_spike=first.get(name),
                    spiking_neurons=frozenset(neurons.get(name, ())),
                    cancelled=name in self._cancelled_populations,
                )
        return ReplayTrace(events=events, summaries=summaries)


def run_replay(network: Network, thetas: ThetaState, config: SimConfig,
               start: Optional[SymbolId] = None) -> ReplayTrace:
    return ReplayEngine(network, thetas, config, start=start).run()
