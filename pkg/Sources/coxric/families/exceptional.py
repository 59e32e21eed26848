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

def path(orders):
	return [(i, i + 1, m) for i, m in enumerate(orders)]

@family("F", "F4: path with bonds 3,4,3")
class TypeF(Family):

	RANKS = (4,)

	def bonds(self, rank, parameter=None):
		return path((3, 4, 3))

@family("H", "H3, H4: path with bonds 5,3 and 5,3,3 (icosahedral)")
class TypeH(Family):

	RANKS = (3, 4)

	def bonds(self, rank, parameter=None):
		return path((5, 3, 3)[:rank - 1])

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
from coxric.errors import SpecError

class TestExceptional(unittest.TestCase):

	def test_f4(self):
		assert TypeF().matrix(4) == [[1, 3, 2, 2], [3, 1, 4, 2], [2, 4, 1, 3], [2, 2, 3, 1]]
		self.assertRaises(SpecError, TypeF().matrix, 5)

	def test_h(self):
		assert TypeH().matrix(3) == [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
		assert TypeH().matrix(4)[2][3] == 3
		self.assertRaises(SpecError, TypeH().matrix, 2)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestExceptional)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
