from abc import ABC, abstractmethod
from typing import Optional

from spike_planner.config.logger import get_logger
from spike_planner.core.pipeline.pipeline_context import ReplayContext
from spike_planner.domain.theta import ThetaState

logger = get_logger()


class ThresholdProcessor(ABC):
    """Abstract base class for every threshold rule in the post-replay chain"""

    def __init__(self):
        self._next_processor: Optional['ThresholdProcessor'] = None

    def set_next(self, processor: 'ThresholdProcessor') -> 'ThresholdProcessor':
        """Set the next processor in the chain"""
        self._next_processor = processor
        return processor

    def process(self, thetas: ThetaState, context: ReplayContext) -> ThetaState:
        """
        Apply this rule and pass the result down the chain

        Args:
            thetas: thresholds in force during the replay that produced context.trace
            context: shared state of the running plan

        Returns:
            Thresholds for the next replay
        """
        try:
            logger.debug(f"🔧 Processing: {self.__class__.__name__} (replay {context.replay_index})")
            adapted = self._process(thetas, context)

            if self._next_processor:
                return self._next_processor.process(adapted, context)

            return adapted

        except Exception as e:
            logger.error(f"❌ Error in {self.__class__.__name__}: {str(e)}")
            context.add_error(f"{self.__class__.__name__}: {e}")
            raise

    @abstractmethod
    def _process(self, thetas: ThetaState, context: ReplayContext) -> ThetaState:
        """Abstract method implemented by concrete rules"""
