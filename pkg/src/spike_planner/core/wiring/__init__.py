from .context_table import ContextTable, derive_contexts
from .network_builder import NetworkBuilder, build_network

__all__ = ['ContextTable', 'NetworkBuilder', 'build_network', 'derive_contexts']
