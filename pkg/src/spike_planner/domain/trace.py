from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Mapping, Optional, Tuple


class EventKind(str, Enum):
    EXTERNAL_STIMULUS = "ext"
    DENDRITIC_PLATEAU = "dap"
    SOMATIC_SPIKE = "spike"
    LOCAL_INHIBITION = "inh_local"
    GLOBAL_INHIBITION = "inh_global"
    CANCELLATION = "cancel"


# GlobalInhibition sorts after SomaticSpike at equal times
KIND_PRIORITY: Dict[EventKind, int] = {
    EventKind.EXTERNAL_STIMULUS: 0,
    EventKind.SOMATIC_SPIKE: 1,
    EventKind.DENDRITIC_PLATEAU: 2,
    EventKind.LOCAL_INHIBITION: 3,
    EventKind.GLOBAL_INHIBITION: 4,
    EventKind.CANCELLATION: 5,
}


@dataclass(frozen=True)
class Event:
    time: float
    kind: EventKind
    # excitatory neuron id, -1 for inhibitory neurons
    neuron: int
    # None for the global inhibitory neuron
    population: Optional[str]
    trigger_time: Optional[float] = None

    def sort_key(self) -> Tuple[float, int, int, str]:
        return (self.time, KIND_PRIORITY[self.kind], self.neuron, self.population or "")


@dataclass(frozen=True)
class PopulationSummary:
    population: str
    first_spike: Optional[float]
    spiking_neurons: FrozenSet[int]
    cancelled: bool

    @property
    def n_act(self) -> int:
        return len(self.spiking_neurons)

    @property
    def spiked(self) -> bool:
        return self.first_spike is not None

    def pattern(self) -> Tuple[str, FrozenSet[int], bool]:
        return (self.population, self.spiking_neurons, self.cancelled)


@dataclass(frozen=True)
class ReplayTrace:
    """Time ordered event log of a single replay plus per-subpopulation summaries"""

    events: Tuple[Event, ...]
    summaries: Mapping[str, PopulationSummary]

    def summary(self, population: str) -> PopulationSummary:
        return self.summaries.get(population, PopulationSummary(population, None, frozenset(), False))

    def first_spike(self, population: str) -> Optional[float]:
        return self.summary(population).first_spike

    def n_act(self, population: str) -> int:
        return self.summary(population).n_act

    def spiking_populations(self) -> Tuple[str, ...]:
        return tuple(name for name, summary in self.summaries.items() if summary.spiked)

    def events_of(self, kind: EventKind, population: Optional[str] = None) -> Tuple[Event, ...]:
        return tuple(
            event for event in self.events
            if event.kind == kind and (population is None or event.population == population)
        )

    def activity_pattern(self) -> FrozenSet[Tuple[str, FrozenSet[int], bool]]:
        """(subpopulation, spiking-neuron set, cancelled flag) for every subpopulation with activity"""
        return frozenset(
            summary.pattern() for summary in self.summaries.values()
            if summary.spiked or summary.cancelled
        )
