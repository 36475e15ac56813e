from .pipeline_context import ReplayContext

__all__ = ['ReplayContext']
