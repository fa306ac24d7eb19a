# -*- coding: utf-8 -*-

# Copyright 2024 Juca Crispim <juca@poraodojuca.dev>

# This file is part of grosskoch.

# grosskoch is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# grosskoch is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with grosskoch. If not, see <http://www.gnu.org/licenses/>.

import logging

LOGGER_NAME = 'grosskoch'
LOG_FORMAT = '%(asctime)s %(levelname)s %(message)s'

_handler = None


def get_logger():
    return logging.getLogger(LOGGER_NAME)


def set_loglevel(loglevel):
    """Sets the level for the grosskoch logger and makes sure the
    messages go somewhere.

    :param loglevel: A level name like ``debug`` or ``warning``."""
    global _handler

    logger = get_logger()
    if _handler is None:
        _handler = logging.StreamHandler()
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(_handler)

    level = getattr(logging, loglevel.upper(), None)
    if not isinstance(level, int):
        raise ValueError('Unknown log level {}'.format(loglevel))
    logger.setLevel(level)


def log(msg, level='info'):
    logger = get_logger()
    getattr(logger, level)(msg)


class LoggerMixin:
    """Adds a ``log`` method that prefixes messages with the class
    name."""

    def log(self, msg, level='info'):
        log('[{}] {}'.format(type(self).__name__, msg), level)
