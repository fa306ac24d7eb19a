# -*- coding: utf-8 -*-

import os
import subprocess
import sys
from unittest import TestCase

from tests import TEST_DATA_DIR

SOURCE_DIR = os.path.join(TEST_DATA_DIR, '..')

grosskoch_conf = os.environ.get('GROSSKOCH_SETTINGS')
if not grosskoch_conf:
    grosskoch_conf = os.path.join(TEST_DATA_DIR, 'grosskoch.conf')
    os.environ['GROSSKOCH_SETTINGS'] = grosskoch_conf


def run_grosskoch(*args, env=None):
    """Runs the grosskoch command in a new process and returns the
    completed process."""
    cmd_env = dict(os.environ)
    cmd_env['PYTHONPATH'] = SOURCE_DIR
    cmd_env['PYTHONIOENCODING'] = 'utf-8'
    cmd_env.pop('GROSSKOCH_FORMAT', None)
    cmd_env.update(env or {})
    cmd = [sys.executable, '-m', 'grosskoch.cmds'] + list(args)
    return subprocess.run(cmd, capture_output=True, encoding='utf-8',
                          env=cmd_env, cwd=SOURCE_DIR)


class BaseFunctionalTest(TestCase):

    def grosskoch(self, *args, env=None):
        return run_grosskoch(*args, env=env)

    def assertOutput(self, args, expected, env=None):
        proc = self.grosskoch(*args, env=env)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.assertEqual(proc.stdout, expected)
