from loguru import logger
import sys

from spike_planner.config.config import LOG_DIR, LOG_LEVEL

# Drop loguru's default handler so records are not emitted twice
logger.remove()

# Console handler on stderr, stdout is reserved for CLI results
logger.add(sys.stderr, format="{time:HH:mm:ss} | {level} | {message}", level=LOG_LEVEL)

if LOG_DIR:
    logger.add(f"{LOG_DIR}/spike_planner_{{time:YYYY-MM-DD}}.log", rotation="10 MB", retention="10 days", level="DEBUG", compression="zip")


def get_logger():
    return logger
