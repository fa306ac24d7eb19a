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

import importlib.machinery
import importlib.util
import os


class Settings:
    """Settings read from a python file. The path for the file comes
    from the environment variable ``envvar``. If it is not set the
    ``default_filename`` shipped with the package is used.

    Values are accessed as attributes. A value that is not in the file
    raises AttributeError.
    """

    def __init__(self, envvar, default_filename):
        self.envvar = envvar
        self.default_filename = default_filename
        self.filename = self._get_filename()
        self._module = self._load(self.filename)

    def __getattr__(self, attrname):
        if attrname.startswith('_'):
            raise AttributeError(attrname)
        return getattr(self._module, attrname)

    def _get_filename(self):
        filename = os.environ.get(self.envvar)
        if not filename:
            filename = os.path.join(os.path.dirname(__file__),
                                    self.default_filename)
        return filename

    def _load(self, filename):
        loader = importlib.machinery.SourceFileLoader('grosskoch_settings',
                                                      filename)
        spec = importlib.util.spec_from_loader(loader.name, loader)
        module = importlib.util.module_from_spec(spec)
        loader.exec_module(module)
        return module
