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
from unittest import TestCase

from grosskoch import utils


class LogTest(TestCase):

    def tearDown(self):
        utils.set_loglevel('warning')
        super().tearDown()

    def test_set_loglevel(self):
        utils.set_loglevel('debug')
        self.assertEqual(utils.get_logger().level, logging.DEBUG)

    def test_set_loglevel_once_handler(self):
        utils.set_loglevel('info')
        utils.set_loglevel('error')
        handlers = [h for h in utils.get_logger().handlers
                    if h is utils._handler]
        self.assertEqual(len(handlers), 1)

    def test_unknown_level(self):
        with self.assertRaises(ValueError):
            utils.set_loglevel('loud')

    def test_log(self):
        with self.assertLogs('grosskoch', level='WARNING') as cm:
            utils.log('careful', level='warning')
        self.assertEqual(cm.output, ['WARNING:grosskoch:careful'])

    def test_logger_mixin(self):

        class Thing(utils.LoggerMixin):
            pass

        with self.assertLogs('grosskoch', level='DEBUG') as cm:
            Thing().log('hi', level='debug')
        self.assertEqual(cm.output, ['DEBUG:grosskoch:[Thing] hi'])
