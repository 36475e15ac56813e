"""
Command-line front end.

    spike-planner plan --env ENV --config CFG --start A --target J --out DIR
    spike-planner disambiguate --env ENV [ENV ...] --config CFG --start A --out DIR
    spike-planner verify MANIFEST_OR_DIR

Exit status: 0 success, 1 failed run (invalid input, non-convergence,
oracle mismatch), 2 usage error.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from spike_planner import __version__
from spike_planner.config.config import DEFAULT_OUTPUT_DIR, EXPERIMENTS_DIR
from spike_planner.config.logger import get_logger
from spike_planner.domain.errors import ReplayPlannerError
from spike_planner.domain.manifest import RunManifest, RunMode
from spike_planner.infrastructure.run_orchestrator import RunOrchestrator

logger = get_logger()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spike-planner",
        description="Replay-based path planning and place disambiguation in a spiking sequence memory",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--seed', type=int, default=None, help="override the seed of the config file")
    commands = parser.add_subparsers(dest='command', required=True)

    plan = commands.add_parser('plan', help="plan a path from start to target")
    plan.add_argument('--env', dest='envs', type=Path, nargs='+', required=True, help="environment file(s)")
    plan.add_argument('--config', type=Path, required=True, help="JSON or TOML SimConfig")
    plan.add_argument('--start', required=True)
    plan.add_argument('--target', required=True)
    plan.add_argument('--out', type=Path, default=DEFAULT_OUTPUT_DIR)

    disambiguate = commands.add_parser('disambiguate', help="find the closest less ambiguous place")
    disambiguate.add_argument('--env', dest='envs', type=Path, nargs='+', required=True, help="environment file(s)")
    disambiguate.add_argument('--config', type=Path, required=True, help="JSON or TOML SimConfig")
    disambiguate.add_argument('--start', required=True)
    disambiguate.add_argument('--out', type=Path, default=DEFAULT_OUTPUT_DIR)

    verify = commands.add_parser('verify', help="compare planner answers with the classical oracle")
    verify.add_argument('manifest', type=Path, nargs='?', default=EXPERIMENTS_DIR,
                        help="manifest file or directory of *.manifest.json (default: bundled experiments)")
    verify.add_argument('--workers', type=int, default=4)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    orchestrator = RunOrchestrator(seed=args.seed)

    try:
        if args.command == 'verify':
            if args.manifest.is_dir():
                return orchestrator.verify_directory(args.manifest, max_workers=args.workers)
            return orchestrator.cmd_verify(orchestrator.file_manager.load_manifest(args.manifest))

        manifest = RunManifest(
            config=args.config,
            environments=tuple(args.envs),
            mode=RunMode.PLAN if args.command == 'plan' else RunMode.DISAMBIGUATE,
            start=args.start,
            target=getattr(args, 'target', None),
            output=args.out,
        )
        if args.command == 'plan':
            return orchestrator.cmd_plan(manifest)
        return orchestrator.cmd_disambiguate(manifest)

    except (ReplayPlannerError, ValidationError, ValueError, OSError) as e:
        logger.error(f"❌ {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
