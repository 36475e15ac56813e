from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from spike_planner.config.config import MANIFEST_SUFFIX
from spike_planner.config.logger import get_logger
from spike_planner.config.parse_and_convert_utils import format_symbol_list
from spike_planner.core.oracle.graph import ambiguity_target, bfs_shortest_path, symbol_graph
from spike_planner.core.planner.planner import ReplayPlanner
from spike_planner.core.wiring.network_builder import build_network
from spike_planner.domain.environment import EnvironmentSet
from spike_planner.domain.errors import ManifestError, ReplayPlannerError
from spike_planner.domain.manifest import RunManifest, RunMode
from spike_planner.domain.network import Network
from spike_planner.domain.results import PlanResult
from spike_planner.domain.sim_config import SimConfig
from .file_manager import FileManager

logger = get_logger()


@dataclass(frozen=True)
class VerifyOutcome:
    name: str
    matched: bool
    message: str


class RunOrchestrator:
    """Loads a run manifest, builds the network, runs the planner and writes or checks the outcome"""

    def __init__(self, seed: Optional[int] = None, file_manager: Optional[FileManager] = None):
        self.seed = seed
        self.file_manager = file_manager or FileManager()

    def _prepare(self, manifest: RunManifest) -> Tuple[SimConfig, EnvironmentSet, Network]:
        missing = manifest.missing_files()
        if missing:
            raise ManifestError(f"missing input files: {[str(path) for path in missing]}")
        seed = self.seed if self.seed is not None else manifest.seed
        config = self.file_manager.load_config(manifest.config, seed=seed)
        envs = self.file_manager.load_environments(manifest.environments)
        return config, envs, build_network(envs, config)

    def _execute(self, manifest: RunManifest) -> Tuple[PlanResult, SimConfig, EnvironmentSet]:
        config, envs, network = self._prepare(manifest)
        planner = ReplayPlanner(network, config)
        if manifest.mode == RunMode.PLAN:
            result = planner.plan_path(manifest.start, manifest.target)
        else:
            result = planner.disambiguate(manifest.start)
        return result, config, envs

    def _report(self, manifest: RunManifest) -> int:
        result, config, envs = self._execute(manifest)
        self.file_manager.save_run(result, manifest.output, envs=envs, config=config)
        print("\n".join(self.file_manager.summary_lines(result)))
        if not result.converged:
            logger.warning(f"⚠️ Run did not converge: {'; '.join(result.diagnostics)}")
            return 1
        return 0

    def cmd_plan(self, manifest: RunManifest) -> int:
        if manifest.mode != RunMode.PLAN:
            raise ManifestError(f"expected a plan manifest, got mode '{manifest.mode.value}'")
        logger.info("🚀 Starting path planning run...")
        return self._report(manifest)

    def cmd_disambiguate(self, manifest: RunManifest) -> int:
        if manifest.mode != RunMode.DISAMBIGUATE:
            raise ManifestError(f"expected a disambiguate manifest, got mode '{manifest.mode.value}'")
        logger.info("🚀 Starting place disambiguation run...")
        return self._report(manifest)

    def check(self, manifest: RunManifest) -> VerifyOutcome:
        """Run the planner and compare its answer with the classical reference"""
        result, _, envs = self._execute(manifest)
        name = manifest.output.name

        if manifest.mode == RunMode.PLAN:
            expected = format_symbol_list(bfs_shortest_path(symbol_graph(envs), manifest.start, manifest.target))
            answer = format_symbol_list(result.path)
            label = "path"
        else:
            expected = ambiguity_target(envs, manifest.start, manifest.oracle_mode).name
            answer = result.target or ""
            label = f"target ({manifest.oracle_mode.value})"

        if not result.converged:
            return VerifyOutcome(name, False, f"planner did not converge ({'; '.join(result.diagnostics)}), oracle {label}: {expected}")
        if answer != expected:
            return VerifyOutcome(name, False, f"mismatch, planner {label}: {answer}, oracle {label}: {expected}")
        return VerifyOutcome(name, True, f"match, {label}: {answer}")

    def cmd_verify(self, manifest: RunManifest) -> int:
        outcome = self.check(manifest)
        return self._print_outcomes([outcome])

    def verify_directory(self, directory: Path, max_workers: int = 4) -> int:
        """Verify every manifest of a directory, runs are independent and fan out over a thread pool"""
        manifests = sorted(directory.glob(f"*{MANIFEST_SUFFIX}"))
        if not manifests:
            raise ManifestError(f"no *{MANIFEST_SUFFIX} files in {directory}")

        def _verify(path: Path) -> VerifyOutcome:
            try:
                outcome = self.check(self.file_manager.load_manifest(path))
                return VerifyOutcome(path.name, outcome.matched, outcome.message)
            except (ReplayPlannerError, ValueError, OSError) as e:
                return VerifyOutcome(path.name, False, f"error: {e}")

        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            outcomes = list(executor.map(_verify, manifests))
        return self._print_outcomes(outcomes)

    def _print_outcomes(self, outcomes: List[VerifyOutcome]) -> int:
        for outcome in outcomes:
            print(f"{'OK' if outcome.matched else 'FAIL'} {outcome.name}: {outcome.message}")
            if outcome.matched:
                logger.success(f"✅ {outcome.name}: {outcome.message}")
            else:
                logger.warning(f"⚠️ {outcome.name}: {outcome.message}")
        return 0 if all(outcome.matched for outcome in outcomes) else 1
