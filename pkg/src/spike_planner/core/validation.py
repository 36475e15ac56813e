from spike_planner.config.logger import get_logger
from spike_planner.domain.errors import ConfigurationError
from spike_planner.domain.sim_config import SimConfig, find_config_violation

logger = get_logger()


def validate_config(config: SimConfig) -> SimConfig:
    """
    Check every SimConfig invariant and return the config unchanged.

    Models built through the constructor are validated already, this also
    covers instances produced by model_copy(update=...) or model_construct.

    Raises:
        ConfigurationError: first violated invariant, with the field name
    """
    violation = find_config_violation(config)
    if violation is not None:
        field, message = violation
        logger.error(f"Invalid configuration, {field}: {message}")
        raise ConfigurationError(message, field=field)
    return config
