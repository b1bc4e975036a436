"""TwistLie logging module."""

import logging
import logging.config

logger = logging.getLogger(__name__)

logging.config.dictConfig({
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
        },
    },
    'handlers': {
        'default': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'standard',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'twistlie': {
            'handlers': ['default'],
            'level': 'INFO',
            'propagate': False
        }
    }
})

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def set_verbosity(verbose: int) -> int:
    """
    Map a `--verbose` count onto the level of the `twistlie` logger.

    No flag keeps warnings only, one flag adds run progress, two or more
    add per-check debug records.

    :param verbose: Number of `--verbose` flags.
    :return: The new logging level.
    """
    level = _LEVELS.get(verbose, logging.DEBUG)
    package_logger = logging.getLogger('twistlie')
    package_logger.setLevel(level)
    for handler in package_logger.handlers:
        handler.setLevel(level)
    return level
