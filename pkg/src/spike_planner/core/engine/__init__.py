from .replay_engine import ReplayEngine, run_replay, somatic_latency

__all__ = ['ReplayEngine', 'run_replay', 'somatic_latency']
