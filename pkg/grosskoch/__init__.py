# -*- coding: utf-8 -*-

# pylint: disable-all

from grosskoch.conf import Settings

__version__ = '0.1.0'


ENVVAR = 'GROSSKOCH_SETTINGS'
DEFAULT_SETTINGS = 'grosskoch.conf'

settings = None


def create_settings():
    global settings

    settings = Settings(ENVVAR, DEFAULT_SETTINGS)
