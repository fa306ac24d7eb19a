# -*- coding: utf-8 -*-

import os

from hypothesis import settings as hypothesis_settings

from grosskoch import create_settings

TEST_DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'testdata')
os.environ['GROSSKOCH_SETTINGS'] = os.path.join(
    TEST_DATA_DIR, 'grosskoch.conf')
create_settings()

# ci runs more examples. Use HYPOTHESIS_PROFILE=ci to get it locally.
hypothesis_settings.register_profile('ci', max_examples=1000, deadline=None)
hypothesis_settings.register_profile('dev', max_examples=100, deadline=None)
hypothesis_settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'dev'))
