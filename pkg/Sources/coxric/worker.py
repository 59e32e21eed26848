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

from coxric import settings
from multiprocessing import Pool
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

class LocalWorker(object):
	"""Runs independent jobs serially, or on a process pool when more than
	one worker is configured. Results always come back in input order."""

	def __init__(self, workers=None):
		self.workers = max(1, int(workers or settings.WORKERS))

	def map(self, func, items):
		"""`func` must be picklable (a module-level function) when workers > 1."""
		items = list(items)
		if self.workers == 1 or len(items) < 2:
			return [func(_) for _ in items]
		processes = min(self.workers, len(items))
		debug("mapping", len(items), "jobs on", processes, "processes")
		pool = Pool(processes=processes)
		try:
			return pool.map_async(func, items).get()
		finally:
			pool.close()
			pool.join()

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

def _square(x):
	return x * x

class TestWorker(unittest.TestCase):

	def test_serial(self):
		assert LocalWorker(1).map(_square, range(5)) == [0, 1, 4, 9, 16]

	def test_pool_keeps_order(self):
		assert LocalWorker(2).map(_square, range(20)) == [_ * _ for _ in range(20)]

	def test_default_from_settings(self):
		assert LocalWorker().workers == max(1, settings.WORKERS)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestWorker)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
