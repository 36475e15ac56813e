"""Classical references for the planner: the symbol digraph, BFS and ambiguity targets"""
from typing import Dict, List, Tuple, Union

import networkx as nx

from spike_planner.core.adaptation.ambiguity import ambiguity_table
from spike_planner.domain.environment import EnvironmentSet, SymbolId
from spike_planner.domain.errors import UnknownSymbolError
from spike_planner.domain.manifest import AmbiguityMode

Location = Union[SymbolId, str]


def symbol_graph(envs: EnvironmentSet) -> nx.DiGraph:
    """
    Directed graph over the symbols, one edge per consecutive pair in any sequence.

    Nodes and adjacency are inserted in symbol index order so every traversal
    breaks ties by index.
    """
    edges = set()
    for _, sequence in envs.sequences():
        for previous, current in zip(sequence, sequence[1:]):
            edges.add((envs.symbol(previous).index, envs.symbol(current).index))

    graph = nx.DiGraph()
    for symbol in envs.symbols:
        graph.add_node(symbol.name, index=symbol.index)
    symbols = envs.symbols
    graph.add_edges_from((symbols[pre].name, symbols[post].name) for pre, post in sorted(edges))
    return graph


def _node(graph: nx.DiGraph, location: Location) -> str:
    name = str(location)
    if name not in graph:
        raise UnknownSymbolError(name)
    return name


def bfs_shortest_path(graph: nx.DiGraph, start: Location, target: Location) -> List[str]:
    """Minimum-hop path from start to target, [] if target is unreachable"""
    source, goal = _node(graph, start), _node(graph, target)
    return nx.single_source_shortest_path(graph, source).get(goal, [])


def hop_distances(graph: nx.DiGraph, start: Location) -> Dict[str, int]:
    return dict(nx.single_source_shortest_path_length(graph, _node(graph, start)))


def ambiguity_target(envs: EnvironmentSet, start: Location,
                     mode: AmbiguityMode = AmbiguityMode.NEAREST_REDUCED) -> SymbolId:
    """
    Place a disambiguation run is expected to settle on.

    nearest_reduced: closest reachable symbol whose ambiguity is below the
    maximum over reachable symbols (ties: lower ambiguity, then index).
    global_min: closest reachable symbol of minimal ambiguity (ties: index).
    A world without ambiguity differences yields the start symbol.
    """
    graph = symbol_graph(envs)
    distances = hop_distances(graph, start)
    alphas = ambiguity_table(envs)
    origin = envs.symbol(str(start))

    reachable = {name: alphas[name] for name in distances}
    highest, lowest = max(reachable.values()), min(reachable.values())
    if highest == lowest:
        return origin

    def _rank(name: str) -> Tuple[int, ...]:
        if mode == AmbiguityMode.GLOBAL_MIN:
            return distances[name], envs.symbol(name).index
        return distances[name], reachable[name], envs.symbol(name).index

    if mode == AmbiguityMode.GLOBAL_MIN:
        candidates = [name for name, alpha in reachable.items() if alpha == lowest]
    else:
        candidates = [name for name, alpha in reachable.items() if alpha < highest]
    return envs.symbol(min(candidates, key=_rank))
