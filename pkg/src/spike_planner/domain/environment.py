from typing import Dict, Iterable, Tuple

from pydantic import Field, PrivateAttr, model_validator

from .base import FrozenModel
from .errors import UnknownSymbolError


class SymbolId(FrozenModel):
    """A location label together with its dense index inside an EnvironmentSet"""

    name: str = Field(..., min_length=1)
    index: int = Field(..., ge=0)

    def __str__(self) -> str:
        return self.name


class Environment(FrozenModel):
    id: str = Field(..., min_length=1)
    sequences: Tuple[Tuple[str, ...], ...] = Field(..., min_length=1)

    def contains(self, name: str) -> bool:
        return any(name in sequence for sequence in self.sequences)


class EnvironmentSet(FrozenModel):
    """
    Named environments, each a list of symbol sequences.

    Symbol indices are assigned by first appearance (environment order, then
    sequence order, then position) so re-ingesting the same set yields the same
    indexing.
    """

    environments: Tuple[Environment, ...] = Field(..., min_length=1)

    _symbols: Tuple[SymbolId, ...] = PrivateAttr(default=())
    _by_name: Dict[str, SymbolId] = PrivateAttr(default_factory=dict)

    @model_validator(mode='after')
    def check_sequences(self) -> 'EnvironmentSet':
        ids = [environment.id for environment in self.environments]
        duplicates = sorted({env_id for env_id in ids if ids.count(env_id) > 1})
        if duplicates:
            raise ValueError(f"duplicate environment ids: {duplicates}")

        start = None
        for environment in self.environments:
            for sequence in environment.sequences:
                if len(sequence) < 2:
                    raise ValueError(f"sequence {list(sequence)} in '{environment.id}' has fewer than 2 symbols")
                if any(not name for name in sequence):
                    raise ValueError(f"empty symbol name in '{environment.id}'")
                for previous, current in zip(sequence, sequence[1:]):
                    if previous == current:
                        raise ValueError(f"self-transition {previous}->{current} in '{environment.id}'")
                if start is None:
                    start = sequence[0]
                elif sequence[0] != start:
                    raise ValueError(f"all sequences must start at '{start}', got '{sequence[0]}' in '{environment.id}'")
        return self

    def model_post_init(self, __context) -> None:
        names: Dict[str, SymbolId] = {}
        for environment in self.environments:
            for sequence in environment.sequences:
                for name in sequence:
                    if name not in names:
                        names[name] = SymbolId(name=name, index=len(names))
        self._by_name = names
        self._symbols = tuple(names.values())

    @property
    def symbols(self) -> Tuple[SymbolId, ...]:
        return self._symbols

    @property
    def start(self) -> SymbolId:
        return self.symbol(self.environments[0].sequences[0][0])

    def symbol(self, name: str) -> SymbolId:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbolError(name) from None

    def sequences(self) -> Iterable[Tuple[str, Tuple[str, ...]]]:
        """Yield (environment id, sequence) pairs in ingestion order"""
        for environment in self.environments:
            for sequence in environment.sequences:
                yield environment.id, sequence

    @classmethod
    def merge(cls, sets: Iterable['EnvironmentSet']) -> 'EnvironmentSet':
        """Concatenate several sets, environment ids must stay unique"""
        environments = [environment for env_set in sets for environment in env_set.environments]
        return cls(environments=tuple(environments))
