import logging
import os
from typing import Optional, Union

logger: logging.Logger = logging.getLogger("sqwalk")

LOG_FORMAT = "[%(asctime)s - %(name)s:%(lineno)d - %(levelname)s] %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _configure_root() -> None:
    if not logging.getLogger().handlers:
        logging.basicConfig(format=LOG_FORMAT, datefmt=LOG_DATEFMT)


def setup_logging(level: Optional[Union[str, int]] = None) -> None:
    """Set the ``sqwalk`` logger level, falling back to the ``SQWALK_LOG`` env var."""
    log_level: int
    if level is not None:
        if isinstance(level, str):
            log_level = getattr(logging, level.upper(), logging.WARNING)
        else:
            log_level = level
        _configure_root()
    else:
        env = os.getenv("SQWALK_LOG")
        if env == "debug":
            log_level = logging.DEBUG
            _configure_root()
        elif env == "info":
            log_level = logging.INFO
            _configure_root()
        else:
            log_level = logging.WARNING

    logger.setLevel(log_level)


setup_logging()
