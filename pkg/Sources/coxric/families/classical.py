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

@family("A", "A<k>: path with all bonds 3 (symmetric group S_{k+1})")
class TypeA(Family):

	def bonds(self, rank, parameter=None):
		return [(i, i + 1, 3) for i in range(rank - 1)]

@family("B", "B<k>: path with bonds 3 and one terminal bond 4 (signed permutations)")
class TypeB(Family):

	def bonds(self, rank, parameter=None):
		# the 4 sits on the last pair; B1 has no bond at all
		return [(i, i + 1, 4 if i == rank - 2 else 3) for i in range(rank - 1)]

@family("D", "D<k>, k>=2: fork with all bonds 3 (even signed permutations)")
class TypeD(Family):

	MIN_RANK = 2

	def bonds(self, rank, parameter=None):
		if rank < 3:
			return []
		path = [(i, i + 1, 3) for i in range(rank - 2)]
		return path + [(rank - 3, rank - 1, 3)]

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

class TestClassical(unittest.TestCase):

	def test_type_a(self):
		assert TypeA().matrix(1) == [[1]]
		assert TypeA().matrix(3) == [[1, 3, 2], [3, 1, 3], [2, 3, 1]]

	def test_type_b(self):
		assert TypeB().matrix(2) == [[1, 4], [4, 1]]
		assert TypeB().matrix(3) == [[1, 3, 2], [3, 1, 4], [2, 4, 1]]

	def test_type_d(self):
		assert TypeD().matrix(2) == [[1, 2], [2, 1]]
		# D3 is A3 with the middle node first
		assert TypeD().matrix(3) == [[1, 3, 3], [3, 1, 2], [3, 2, 1]]
		d4 = TypeD().matrix(4)
		assert sorted(d4[1]) == [1, 3, 3, 3], d4

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestClassical)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
