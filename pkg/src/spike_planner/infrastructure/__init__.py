from .file_manager import FileManager
from .run_orchestrator import RunOrchestrator, VerifyOutcome

__all__ = ['FileManager', 'RunOrchestrator', 'VerifyOutcome']
