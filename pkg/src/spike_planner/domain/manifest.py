from enum import Enum
from pathlib import Path
from typing import Optional, Tuple

from pydantic import Field, model_validator

from .base import FrozenModel


class RunMode(str, Enum):
    PLAN = "plan"
    DISAMBIGUATE = "disambiguate"


class AmbiguityMode(str, Enum):
    NEAREST_REDUCED = "nearest_reduced"
    GLOBAL_MIN = "global_min"


class RunManifest(FrozenModel):
    """Everything a CLI run needs: which files to load, what to ask, where to write"""

    config: Path
    environments: Tuple[Path, ...] = Field(..., min_length=1)
    mode: RunMode
    start: str = Field(..., min_length=1)
    target: Optional[str] = None
    output: Path
    oracle_mode: AmbiguityMode = AmbiguityMode.NEAREST_REDUCED
    seed: Optional[int] = None

    @model_validator(mode='after')
    def check_mode(self) -> 'RunManifest':
        if self.mode == RunMode.PLAN and not self.target:
            raise ValueError("plan mode requires a target")
        return self

    def missing_files(self) -> Tuple[Path, ...]:
        return tuple(path for path in (self.config, *self.environments) if not path.is_file())

    def resolved(self, base_dir: Path) -> 'RunManifest':
        """Resolve relative paths against the directory holding the manifest file"""
        def _resolve(path: Path) -> Path:
            return path if path.is_absolute() else base_dir / path

        return self.model_copy(update={
            'config': _resolve(self.config),
            'environments': tuple(_resolve(path) for path in self.environments),
            'output': _resolve(self.output),
        })
