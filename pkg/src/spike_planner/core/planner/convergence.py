import math
from typing import Optional, Sequence, Tuple

import networkx as nx

from spike_planner.domain.errors import AmbiguousActivityError
from spike_planner.domain.trace import ReplayTrace


def has_converged(previous: ReplayTrace, current: ReplayTrace) -> bool:
    """Two consecutive replays with the same (subpopulation, spiking neurons, cancelled) sets"""
    return previous.activity_pattern() == current.activity_pattern()


def extract_path(trace: ReplayTrace, graph: nx.DiGraph, target: Optional[str] = None) -> Tuple[str, ...]:
    """
    Surviving subpopulations ordered by first spike time.

    With a target only subpopulations that fired no later than the target are
    kept and the path has to end there.

    Raises:
        AmbiguousActivityError: shared first-spike times, a missing target, or
            a sequence that is not a chain in the symbol graph
    """
    survivors = [
        summary for summary in trace.summaries.values()
        if summary.spiked and not summary.cancelled
    ]
    if target is not None:
        goal = trace.summary(target)
        if not goal.spiked or goal.cancelled:
            raise AmbiguousActivityError(f"target '{target}' did not fire in the final replay")
        survivors = [summary for summary in survivors if summary.first_spike <= goal.first_spike]

    survivors.sort(key=lambda summary: (summary.first_spike, graph.nodes[summary.population].get('index', 0)))

    for earlier, later in zip(survivors, survivors[1:]):
        if math.isclose(earlier.first_spike, later.first_spike, abs_tol=1e-9):
            raise AmbiguousActivityError(
                f"ambiguous final activity: {earlier.population} and {later.population} "
                f"both fire first at {earlier.first_spike:.3f} ms"
            )

    path = tuple(summary.population for summary in survivors)
    for previous, current in zip(path, path[1:]):
        if not graph.has_edge(previous, current):
            raise AmbiguousActivityError(f"final activity {list(path)} breaks at {previous}->{current}")
    return path


def concurrent_alternatives(trace: ReplayTrace, path: Sequence[str]) -> int:
    """Path subpopulations that share their first spike time with an off-path subpopulation"""
    on_path = set(path)
    others = [
        trace.first_spike(name) for name in trace.spiking_populations() if name not in on_path
    ]
    count = 0
    for name in path:
        first = trace.first_spike(name)
        if first is not None and any(math.isclose(first, other, abs_tol=1e-9) for other in others):
            count += 1
    return count
