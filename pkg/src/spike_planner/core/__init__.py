from .validation import validate_config

__all__ = ['validate_config']
