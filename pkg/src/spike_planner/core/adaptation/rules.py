"""
Threshold adaptation rules applied between replays.

All rules are multiplicative with factors in (0, 1], so thresholds only ever
decrease and stay positive.
"""
import math
from typing import Dict, List, Tuple

from spike_planner.config.logger import get_logger
from spike_planner.domain.environment import SymbolId
from spike_planner.domain.errors import ConfigurationError, UnknownSymbolError
from spike_planner.domain.network import Network
from spike_planner.domain.results import AdaptationReport, AdaptationRow, AdaptationRule
from spike_planner.domain.sim_config import AdtaMode, SimConfig
from spike_planner.domain.theta import ThetaState
from spike_planner.domain.trace import ReplayTrace

logger = get_logger()


def apply_target_rule(thetas: ThetaState, target: SymbolId, config: SimConfig) -> ThetaState:
    """Lower the target threshold by lambda_target. Single-shot: the planner calls it once per run."""
    if not 0 <= target.index < len(thetas):
        raise UnknownSymbolError(target.name)
    factors = [1.0] * len(thetas)
    factors[target.index] = config.lambda_target
    logger.debug(f"Target rule: theta_{target.name} {thetas.of(target):.6f} -> {thetas.of(target) * config.lambda_target:.6f}")
    return thetas.scaled(factors)


def spike_gap(trace: ReplayTrace, m: SymbolId, n: SymbolId):
    """first_spike(n) - first_spike(m), None if either never spiked"""
    first_m, first_n = trace.first_spike(m.name), trace.first_spike(n.name)
    if first_m is None or first_n is None:
        return None
    return first_n - first_m


def stdta_eligible(trace: ReplayTrace, network: Network, m: SymbolId, n: SymbolId, config: SimConfig) -> bool:
    delta_t = spike_gap(trace, m, n)
    if delta_t is None:
        return False
    if not config.dt_min_b < delta_t < config.dt_max_b:
        return False
    n_con = network.connection_count(
        m, n, trace.summary(m.name).spiking_neurons, trace.summary(n.name).spiking_neurons
    )
    return n_con > config.rho


def apply_stdta(thetas: ThetaState, trace: ReplayTrace, network: Network, config: SimConfig,
                replay: int = 0) -> Tuple[ThetaState, AdaptationReport]:
    """
    Back-tracing step: every subpopulation with at least one successor that
    fired inside the (dt_min_b, dt_max_b) window and is connected through more
    than rho active synapses gets theta * lambda_b, once per replay.
    """
    factors = [1.0] * len(thetas)
    rows: List[AdaptationRow] = []

    for symbol in network.symbols:
        gaps = []
        eligible = False
        for successor in network.successor_symbols(symbol):
            delta_t = spike_gap(trace, symbol, successor)
            if delta_t is None:
                continue
            gaps.append((successor.name, delta_t))
            eligible = eligible or stdta_eligible(trace, network, symbol, successor, config)

        old = thetas.of(symbol)
        if eligible:
            factors[symbol.index] = config.lambda_b
        rows.append(AdaptationRow(
            population=symbol.name,
            old_theta=old,
            new_theta=old * factors[symbol.index],
            rule=AdaptationRule.STDTA if eligible else AdaptationRule.NONE,
            factor=factors[symbol.index],
            n_act=trace.n_act(symbol.name),
            delta_ts=tuple(gaps),
        ))

    report = AdaptationReport(rule=AdaptationRule.STDTA, replay=replay, rows=tuple(rows))
    if report.updated():
        logger.debug(f"STDTA after replay {replay}: {', '.join(report.updated_populations())}")
    return thetas.scaled(factors), report


def adta_factor(n_act: int, n_total: int, config: SimConfig) -> float:
    """
    Ambiguity-dependent reduction factor.

    With F_a = n_act/n_total and F_rho = rho/n_total the exponent is
    gamma * (F_a - F_rho), gamma_plus when F_a >= F_rho else gamma_minus.
    Literal mode returns lambda_a * e^x, complement mode 1 - lambda_a * e^x.

    Raises:
        ConfigurationError: counts out of range or a factor outside (0, 1]
    """
    if not 0 < n_act <= n_total:
        raise ConfigurationError(f"need 0 < n_act <= n_total, got {n_act}/{n_total}", field='n_act')

    gamma = config.gamma_plus if n_act >= config.rho else config.gamma_minus
    scaled = config.lambda_a * math.exp(gamma * (n_act - config.rho) / n_total)
    factor = scaled if config.adta_mode == AdtaMode.LITERAL else 1.0 - scaled

    if not 0.0 < factor <= 1.0:
        raise ConfigurationError(
            f"ADTA factor {factor} outside (0,1] for n_act={n_act}, n_total={n_total}", field='lambda_a'
        )
    return factor


def apply_adta(thetas: ThetaState, trace: ReplayTrace, network: Network, config: SimConfig,
               replay: int = 1) -> Tuple[ThetaState, AdaptationReport]:
    """One-shot update after the measurement replay: every spiking subpopulation below the maximum active count is lowered"""
    counts: Dict[str, int] = {name: trace.n_act(name) for name in trace.spiking_populations()}
    most_active = max(counts.values(), default=0)

    factors = [1.0] * len(thetas)
    rows: List[AdaptationRow] = []
    for symbol in network.symbols:
        n_act = counts.get(symbol.name, 0)
        old = thetas.of(symbol)
        if 0 < n_act < most_active:
            factors[symbol.index] = adta_factor(n_act, config.N, config)
            rule = AdaptationRule.ADTA
        else:
            rule = AdaptationRule.NONE
        rows.append(AdaptationRow(
            population=symbol.name,
            old_theta=old,
            new_theta=old * factors[symbol.index],
            rule=rule,
            factor=factors[symbol.index],
            n_act=n_act,
        ))

    report = AdaptationReport(rule=AdaptationRule.ADTA, replay=replay, rows=tuple(rows))
    if report.updated():
        updates = ', '.join(f"{row.population} x{row.factor:.6f}" for row in report.updated())
        logger.debug(f"ADTA after replay {replay}: {updates}")
    else:
        logger.debug(f"ADTA after replay {replay}: uniform activity, nothing to update")
    return thetas.scaled(factors), report
