import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd

from spike_planner.config.config import (
    AMBIGUITY_COLUMNS,
    AMBIGUITY_FILENAME,
    GLOBAL_INHIBITION_LABEL,
    RASTER_COLUMNS,
    RASTER_FILENAME,
    SUMMARY_FILENAME,
    THETA_COLUMNS,
    THETA_FILENAME,
)
from spike_planner.config.logger import get_logger
from spike_planner.config.parse_and_convert_utils import format_bool, format_symbol_list, read_structured_file
from spike_planner.core.adaptation.ambiguity import ambiguity_table, expected_active
from spike_planner.domain.environment import EnvironmentSet
from spike_planner.domain.errors import ManifestError
from spike_planner.domain.manifest import RunManifest
from spike_planner.domain.results import AdaptationRule, PlanMode, PlanResult
from spike_planner.domain.sim_config import SimConfig

logger = get_logger()

PathLike = Union[str, Path]

FLOAT_FORMAT = "%.6f"


class FileManager:
    """Reads run inputs (configs, environments, manifests) and writes run artifacts"""

    def load_config(self, file_path: PathLike, seed: Optional[int] = None) -> SimConfig:
        """
        Load a JSON or TOML SimConfig, optionally overriding its seed

        Args:
            file_path: config file, keys are SimConfig field names
            seed: replaces the file's seed when given

        Returns:
            Validated SimConfig
        """
        try:
            data = read_structured_file(file_path)
            if seed is not None:
                data = {**data, 'seed': seed}
            config = SimConfig.model_validate(data)
            logger.info(f"Loaded config from {file_path}")
            logger.debug(f"Config: {config.model_dump(mode='json')}")
            return config
        except Exception as e:
            logger.error(f"Error loading config from {file_path}: {str(e)}")
            raise

    def load_environments(self, file_paths: Sequence[PathLike]) -> EnvironmentSet:
        """Load one or more environment files and merge them into a single set"""
        if not file_paths:
            raise ManifestError("at least one environment file is required")
        sets: List[EnvironmentSet] = []
        for file_path in file_paths:
            try:
                sets.append(EnvironmentSet.model_validate(read_structured_file(file_path)))
                logger.info(f"Loaded environments from {file_path}")
            except Exception as e:
                logger.error(f"Error loading environments from {file_path}: {str(e)}")
                raise
        envs = sets[0] if len(sets) == 1 else EnvironmentSet.merge(sets)
        logger.debug(f"{len(envs.environments)} environments, symbols {[symbol.name for symbol in envs.symbols]}")
        return envs

    def load_manifest(self, file_path: PathLike) -> RunManifest:
        """Parse a manifest and resolve its relative paths against the manifest's directory"""
        path = Path(file_path)
        if not path.is_file():
            raise ManifestError(f"manifest {path} does not exist")
        manifest = RunManifest.model_validate(read_structured_file(path)).resolved(path.parent)
        missing = manifest.missing_files()
        if missing:
            raise ManifestError(f"manifest {path} references missing files: {[str(item) for item in missing]}")
        return manifest

    def save_environments(self, envs: EnvironmentSet, file_path: PathLike):
        self._write_json(envs.model_dump(mode='json'), file_path)

    def save_config(self, config: SimConfig, file_path: PathLike):
        self._write_json(config.model_dump(mode='json'), file_path)

    def _write_json(self, payload: Dict, file_path: PathLike):
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding='utf-8')
        logger.debug(f"Wrote {path}")

    # ---- artifacts ----

    def raster_frame(self, result: PlanResult) -> pd.DataFrame:
        rows = [
            (replay, event.time, event.population or GLOBAL_INHIBITION_LABEL, event.neuron, event.kind.value)
            for replay, trace in enumerate(result.traces, start=1)
            for event in trace.events
        ]
        return pd.DataFrame(rows, columns=RASTER_COLUMNS)

    def theta_frame(self, result: PlanResult) -> pd.DataFrame:
        """Initial thresholds at replay 0, then one row per population each rule actually changed"""
        rows = []
        if result.initial_thetas is not None:
            for name, theta in zip(result.populations, result.initial_thetas.theta):
                rows.append((0, name, theta, AdaptationRule.INIT.value))
        for report in result.reports:
            for row in report.updated():
                rows.append((report.replay, row.population, row.new_theta, row.rule.value))
        return pd.DataFrame(rows, columns=THETA_COLUMNS)

    def ambiguity_frame(self, result: PlanResult, envs: EnvironmentSet, config: SimConfig) -> pd.DataFrame:
        """Ambiguity per symbol next to the active counts of the measurement replay"""
        measurement = result.traces[0]
        rows = [
            (name, alpha, expected_active(alpha, config), measurement.n_act(name))
            for name, alpha in ambiguity_table(envs).items()
        ]
        return pd.DataFrame(rows, columns=AMBIGUITY_COLUMNS)

    def summary_lines(self, result: PlanResult) -> List[str]:
        return [
            f"mode: {result.mode.value}",
            f"start: {result.start}",
            f"target: {result.target or ''}",
            f"path: {format_symbol_list(result.path)}",
            f"replays_used: {result.replays_used}",
            f"converged: {format_bool(result.converged)}",
            f"diagnostics: {'; '.join(result.diagnostics)}",
        ]

    def save_run(self, result: PlanResult, output_dir: PathLike,
                 envs: Optional[EnvironmentSet] = None, config: Optional[SimConfig] = None) -> Path:
        """Write summary, raster and theta trace (plus the ambiguity table for disambiguation runs)"""
        output = Path(output_dir)
        try:
            output.mkdir(parents=True, exist_ok=True)
            (output / SUMMARY_FILENAME).write_text("\n".join(self.summary_lines(result)) + "\n", encoding='utf-8')
            self.raster_frame(result).to_csv(output / RASTER_FILENAME, index=False, float_format=FLOAT_FORMAT)
            self.theta_frame(result).to_csv(output / THETA_FILENAME, index=False, float_format=FLOAT_FORMAT)
            if result.mode == PlanMode.DISAMBIGUATION and envs is not None and config is not None:
                self.ambiguity_frame(result, envs, config).to_csv(output / AMBIGUITY_FILENAME, index=False)
            logger.success(f"Artifacts saved to {output}")
            return output
        except Exception as e:
            logger.error(f"Error saving artifacts to {output}: {str(e)}")
            raise
