import logging

import pytest

from twistlie.logger import logger, set_verbosity

package_logger = logging.getLogger('twistlie')


@pytest.fixture
def default_verbosity():
    yield
    set_verbosity(1)


@pytest.mark.parametrize('verbose,level', [
    (0, logging.WARNING),
    (1, logging.INFO),
    (2, logging.DEBUG),
    (5, logging.DEBUG),
])
def test_set_verbosity(default_verbosity, verbose, level):
    assert set_verbosity(verbose) == level
    assert package_logger.level == level
    assert all(handler.level == level
               for handler in package_logger.handlers)
    assert logger.getEffectiveLevel() == level
