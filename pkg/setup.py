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

from setuptools import setup, find_packages

setup(
	name             = "coxric",
	version          = "1.0.0",
	description      = "Finite Coxeter groups, Bruhat graphs and their discrete Ricci curvature",
	license          = "GPLv3+",
	package_dir      = {"": "Sources"},
	packages         = find_packages("Sources", include=["coxric", "coxric.*"]),
	py_modules       = ["reporter"],
	python_requires  = ">=3.8",
	install_requires = [
		"networkx",
		"numpy",
		"pandas",
		"simplejson",
	],
	entry_points     = {
		"console_scripts": ["coxric = coxric.cli:main"],
	},
)

# EOF
