import logging
from logging.config import dictConfig

from app.utils.settings import get_settings


def configure_logging(level: str | None = None) -> None:
    """Configure application-wide logging. Results go to stdout, logs to stderr."""
    level = level or get_settings().log_level
    dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "standard": {
                    "format": "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s",
                },
            },
            "handlers": {
                "default": {
                    "class": "logging.StreamHandler",
                    "formatter": "standard",
                    "level": level,
                    "stream": "ext://sys.stderr",
                },
            },
            "loggers": {
                "": {"handlers": ["default"], "level": level},
                "app": {"level": level},
            },
        }
    )
    logging.getLogger(__name__).debug("Logging configured at %s", level)
