from .convergence import concurrent_alternatives, extract_path, has_converged
from .planner import ReplayPlanner, disambiguate, plan_path

__all__ = ['ReplayPlanner', 'concurrent_alternatives', 'disambiguate', 'extract_path', 'has_converged', 'plan_path']
