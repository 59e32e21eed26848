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

import unittest
import os
import sys

SOURCES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "Sources")
sys.path.insert(0, SOURCES)

if __name__ == "__main__":
	tests = unittest.TestLoader().discover(os.path.join(SOURCES, "coxric"), "*.py", top_level_dir=SOURCES)
	unittest.TextTestRunner(verbosity=2).run(tests)

# EOF
