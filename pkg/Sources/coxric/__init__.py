#!/usr/bin/env python
# Encoding: utf-8
# -----------------------------------------------------------------------------
# Project : coxric
# -----------------------------------------------------------------------------
# License : GNU General Public License
# -----------------------------------------------------------------------------
# Creation : 19-Oct-2026
# Last mod : 19-Oct-2026
# -----------------------------------------------------------------------------
# This file is part of coxric, released under the GNU General Public License
# version 3 or later. See <http://www.gnu.org/licenses/>.

"""
coxric: finite Coxeter groups, their Bruhat graphs and the discrete
(Bakry-Emery) Ricci curvature of graphs.
"""

import importlib
import os
import reporter

__version__          = "1.0.0"
ENVIRONMENT_VARIABLE = "COXRIC_SETTINGS"
DEFAULT_SETTINGS     = "coxric.defaults"

class Settings:
	"""Every UPPERCASE attribute of the built-in defaults, then of the module
	named by $COXRIC_SETTINGS (if any), becomes an attribute of this object."""

	def __init__(self):
		self.load(DEFAULT_SETTINGS)
		settings_module = os.environ.get(ENVIRONMENT_VARIABLE)
		if settings_module:
			self.load(settings_module)

	def load(self, module_name):
		try:
			mod = importlib.import_module(module_name)
		except ImportError as e:
			raise Exception("Settings module '%s' (from $%s) cannot be imported: %s" % (module_name, ENVIRONMENT_VARIABLE, e))
		for setting in dir(mod):
			if setting == setting.upper() and not setting.startswith("_"):
				setattr(self, setting, getattr(mod, setting))

	def update(self, values):
		"""Overrides settings for the running process. Returns the previous
		values so the caller can restore them."""
		previous = {}
		for name, value in values.items():
			if name != name.upper() or not hasattr(self, name):
				raise KeyError("unknown setting '%s'" % (name))
			previous[name] = getattr(self, name)
			setattr(self, name, value)
		return previous

	def snapshot(self):
		return dict((k, v) for k, v in vars(self).items() if k == k.upper())

	def __getitem__(self, name): return getattr(self, name)

settings = Settings()

# reports go to stdout, messages to stderr
if not reporter.REPORTER.delegates:
	reporter.REPORTER.register(reporter.StderrReporter(level=settings.LOG_LEVEL))

# EOF
