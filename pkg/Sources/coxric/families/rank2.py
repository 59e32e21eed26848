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

from coxric.families import Family, family
from coxric.errors   import SpecError

@family("I", "I2(m), m>=2: single bond m (dihedral group of order 2m)")
class TypeI(Family):

	RANKS      = (2,)
	PARAMETRIC = True

	def check(self, rank, parameter=None):
		super(TypeI, self).check(rank, parameter)
		if parameter < 2:
			raise SpecError("I2 parameter must be at least 2, got %d" % (parameter))

	def bonds(self, rank, parameter=None):
		return [(0, 1, parameter)]

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

class TestRank2(unittest.TestCase):

	def test_matrix(self):
		assert TypeI().matrix(2, 7) == [[1, 7], [7, 1]]
		assert TypeI().matrix(2, 2) == [[1, 2], [2, 1]]

	def test_errors(self):
		self.assertRaises(SpecError, TypeI().matrix, 2, 1)
		self.assertRaises(SpecError, TypeI().matrix, 2)
		self.assertRaises(SpecError, TypeI().matrix, 3, 5)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestRank2)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
