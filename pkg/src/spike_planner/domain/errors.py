from typing import Optional


class ReplayPlannerError(Exception):
    """Base class for every error raised by spike_planner"""


class ConfigurationError(ReplayPlannerError, ValueError):
    """A SimConfig (or derived value) violates an invariant"""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class CapacityError(ReplayPlannerError):
    """A subpopulation cannot host all of its contexts (contexts x rho > N)"""


class UnknownSymbolError(ReplayPlannerError, KeyError):
    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(symbol)

    def __str__(self) -> str:
        return f"unknown symbol '{self.symbol}'"


class UnreachableTargetError(ReplayPlannerError):
    def __init__(self, start: str, target: str):
        self.start = start
        self.target = target
        super().__init__(f"target '{target}' is not reachable from '{start}'")


class RunawayActivityError(ReplayPlannerError):
    """More somatic spikes than neurons in the network, the parameters are inconsistent"""


class AmbiguousActivityError(ReplayPlannerError):
    """The final replay did not reduce to a single chain of subpopulations"""


class GenerationError(ReplayPlannerError):
    """Random environment generation exhausted its resampling budget"""


class ManifestError(ReplayPlannerError):
    """A run manifest references missing files or is incomplete for its mode"""
