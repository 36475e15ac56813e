from .processor_chain import ThresholdProcessor

__all__ = ['ThresholdProcessor']
