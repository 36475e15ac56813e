from dataclasses import dataclass, field
from typing import AbstractSet, Dict, FrozenSet, Mapping, Tuple

from .environment import EnvironmentSet, SymbolId


@dataclass(frozen=True)
class ContextKey:
    """One learned occurrence of a symbol: its environment and the prefix ending at it"""

    environment: str
    symbol: SymbolId
    prefix: Tuple[str, ...]


Synapse = Tuple[int, int]


@dataclass(frozen=True)
class Network:
    """
    Trained network surrogate.

    Neuron ids are global: symbol.index * n_per_population + slot. Every
    context owns exactly rho neurons of its symbol's subpopulation and each
    consecutive context pair is connected by the full rho x rho product.
    """

    environments: EnvironmentSet
    n_per_population: int
    rho: int
    start: SymbolId
    contexts: Tuple[ContextKey, ...]
    context_neurons: Mapping[ContextKey, Tuple[int, ...]]
    synapses: Tuple[Synapse, ...]

    _fanout: Dict[int, Tuple[int, ...]] = field(init=False, repr=False, compare=False)
    _pair_synapses: Dict[Tuple[int, int], Tuple[Synapse, ...]] = field(init=False, repr=False, compare=False)
    _successors: Dict[int, Tuple[SymbolId, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fanout: Dict[int, list] = {}
        pairs: Dict[Tuple[int, int], list] = {}
        for pre, post in self.synapses:
            fanout.setdefault(pre, []).append(post)
            key = (pre // self.n_per_population, post // self.n_per_population)
            pairs.setdefault(key, []).append((pre, post))

        symbols = self.environments.symbols
        successors: Dict[int, set] = {}
        for pre_index, post_index in pairs:
            successors.setdefault(pre_index, set()).add(post_index)

        object.__setattr__(self, '_fanout', {pre: tuple(posts) for pre, posts in fanout.items()})
        object.__setattr__(self, '_pair_synapses', {key: tuple(value) for key, value in pairs.items()})
        object.__setattr__(self, '_successors', {
            pre_index: tuple(symbols[index] for index in sorted(post_indices))
            for pre_index, post_indices in successors.items()
        })

    @property
    def symbols(self) -> Tuple[SymbolId, ...]:
        return self.environments.symbols

    @property
    def neuron_count(self) -> int:
        return self.n_per_population * len(self.symbols)

    def population_of(self, neuron: int) -> SymbolId:
        return self.symbols[neuron // self.n_per_population]

    def fanout(self, neuron: int) -> Tuple[int, ...]:
        return self._fanout.get(neuron, ())

    def contexts_of(self, symbol: SymbolId) -> Tuple[ContextKey, ...]:
        return tuple(context for context in self.contexts if context.symbol == symbol)

    def population_neurons(self, symbol: SymbolId) -> FrozenSet[int]:
        """All allocated (context) neurons of a subpopulation"""
        return frozenset(neuron for context in self.contexts_of(symbol) for neuron in self.context_neurons[context])

    def successor_symbols(self, symbol: SymbolId) -> Tuple[SymbolId, ...]:
        return self._successors.get(symbol.index, ())

    def connection_count(self, pre: SymbolId, post: SymbolId,
                         active_pre: AbstractSet[int], active_post: AbstractSet[int]) -> int:
        """Synapses from the given active neurons of pre onto the given active neurons of post"""
        return sum(
            1 for source, target in self._pair_synapses.get((pre.index, post.index), ())
            if source in active_pre and target in active_post
        )

    def symbol_edges(self) -> FrozenSet[Tuple[str, str]]:
        """Projection of the context synapses onto symbol pairs"""
        symbols = self.symbols
        return frozenset((symbols[pre].name, symbols[post].name) for pre, post in self._pair_synapses)
