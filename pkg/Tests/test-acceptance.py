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

# The acceptance suite alone: Bruhat curvature, spectral gap, oracles,
# isoperimetry, dihedral structure and determinism over the test corpus.

import unittest
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "Sources"))

if __name__ == "__main__":
	from coxric.checks import TestAcceptance
	suite = unittest.TestLoader().loadTestsFromTestCase(TestAcceptance)
	result = unittest.TextTestRunner(verbosity=2).run(suite)
	sys.exit(not result.wasSuccessful())

# EOF
