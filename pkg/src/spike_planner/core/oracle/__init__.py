from .generator import RandomEnvParams, gen_random_env
from .graph import ambiguity_target, bfs_shortest_path, hop_distances, symbol_graph

__all__ = ['RandomEnvParams', 'ambiguity_target', 'bfs_shortest_path', 'gen_random_env', 'hop_distances', 'symbol_graph']
