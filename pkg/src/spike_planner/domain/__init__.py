from .environment import Environment, EnvironmentSet, SymbolId
from .errors import (
    AmbiguousActivityError,
    CapacityError,
    ConfigurationError,
    GenerationError,
    ManifestError,
    ReplayPlannerError,
    RunawayActivityError,
    UnknownSymbolError,
    UnreachableTargetError,
)
from .manifest import AmbiguityMode, RunManifest, RunMode
from .network import ContextKey, Network
from .results import AdaptationReport, AdaptationRow, AdaptationRule, PlanMode, PlanResult
from .sim_config import AdtaMode, SimConfig
from .theta import ThetaState
from .trace import Event, EventKind, PopulationSummary, ReplayTrace

__all__ = [
    'AdaptationReport', 'AdaptationRow', 'AdaptationRule', 'AdtaMode', 'AmbiguityMode',
    'AmbiguousActivityError', 'CapacityError', 'ConfigurationError', 'ContextKey', 'Environment',
    'EnvironmentSet', 'Event', 'EventKind', 'GenerationError', 'ManifestError', 'Network',
    'PlanMode', 'PlanResult', 'PopulationSummary', 'ReplayPlannerError', 'ReplayTrace',
    'RunManifest', 'RunMode', 'RunawayActivityError', 'SimConfig', 'SymbolId', 'ThetaState',
    'UnknownSymbolError', 'UnreachableTargetError',
]
