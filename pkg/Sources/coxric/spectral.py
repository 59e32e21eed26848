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
Spectrum of D - A (the negated graph Laplacian) and the spectral gap, its
least nonzero eigenvalue, which a positive curvature bounds from below.
"""

from coxric        import settings
from coxric.linalg import SymMatrix, sym_eigen
from coxric.models import SpectralReport, GapVerdict
from coxric.errors import SizeGuardError
import numpy
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

def laplacian(g):
	"""D - A"""
	A = g.adjacency_matrix()
	return SymMatrix(numpy.diag(A.sum(axis=1)) - A)

def check_size(g, force=False):
	limit = force and settings.SPECTRAL_FORCE_MAX_VERTICES or settings.SPECTRAL_MAX_VERTICES
	if g.n > limit:
		error("spectral gap refused on", g.name, ":", g.n, "vertices, limit", limit)
		raise SizeGuardError("spectral gap of %s" % (g.name or "graph"), g.n, limit,
			hint=force and "hard limit" or "use --force")

def spectral_gap(g, force=False):
	"""SpectralReport of D - A. Eigenvalues below ZERO_EIGEN_TOL * max(1,
	lambda_max) count as zero; their number is the number of components."""
	check_size(g, force)
	values    = sym_eigen(laplacian(g))
	threshold = settings.ZERO_EIGEN_TOL * max(1.0, float(values[-1]))
	zeros     = int((values < threshold).sum())
	positive  = values[values >= threshold]
	gap       = float(positive[0]) if len(positive) else None
	if zeros > 1:
		warning(g.name or "graph", "is disconnected:", zeros, "components, gap taken above the zero eigenvalues")
	if gap is None:
		warning(g.name or "graph", "has no nonzero Laplacian eigenvalue")
	return SpectralReport(g.n, values, gap, zeros, threshold)

def check_gap_vs_ricci(g, ric, force=False):
	"""PASS iff ric <= 0 (nothing to check) or gap >= ric - GAP_TOL. `g` may
	also be an already computed SpectralReport."""
	report = g if isinstance(g, SpectralReport) else spectral_gap(g, force)
	gap    = report.gap
	if ric <= 0:
		return GapVerdict(gap, ric, True, "vacuous: curvature is not positive")
	if gap is None:
		return GapVerdict(gap, ric, False, "no nonzero eigenvalue")
	passed = gap >= ric - settings.GAP_TOL
	note   = None
	if abs(gap - ric) <= settings.GAP_TOL:
		note = "equality"
	return GapVerdict(gap, ric, passed, note)

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import networkx
from coxric.graph import from_networkx, Graph

class TestSpectral(unittest.TestCase):

	def test_laplacian(self):
		numpy.testing.assert_array_equal(laplacian(from_networkx(networkx.complete_graph(2))).data, [[1, -1], [-1, 1]])
		L = laplacian(from_networkx(networkx.cycle_graph(4))).data
		assert (numpy.diag(L) == 2).all() and (L.sum(axis=1) == 0).all()
		g = from_networkx(networkx.petersen_graph())
		assert laplacian(g).trace() == 2 * g.edge_count()

	def test_gaps(self):
		assert abs(spectral_gap(from_networkx(networkx.complete_graph(2))).gap - 2) < 1e-9
		assert abs(spectral_gap(from_networkx(networkx.cycle_graph(4))).gap - 2) < 1e-9
		assert abs(spectral_gap(from_networkx(networkx.complete_bipartite_graph(3, 3))).gap - 3) < 1e-9

	def test_matches_networkx(self):
		G = networkx.gnp_random_graph(80, 0.1, seed=12)
		report = spectral_gap(from_networkx(G))
		numpy.testing.assert_allclose(report.eigenvalues, sorted(networkx.laplacian_spectrum(G)), atol=1e-8)
		assert report.zero_multiplicity == networkx.number_connected_components(G)

	def test_disconnected(self):
		import reporter as r
		memory = r.MemoryReporter()
		r.register(memory)
		try:
			report = spectral_gap(Graph(4, [(0, 1), (2, 3)], name="two-edges"))
		finally:
			r.unregister(memory)
		assert report.zero_multiplicity == 2 and abs(report.gap - 2) < 1e-9
		assert memory.find(r.WARNING, "disconnected")

	def test_verdicts(self):
		k33 = from_networkx(networkx.complete_bipartite_graph(3, 3))
		assert check_gap_vs_ricci(k33, 2.0).passed
		vacuous = check_gap_vs_ricci(from_networkx(networkx.cycle_graph(6)), 0.0)
		assert vacuous.passed and "vacuous" in vacuous.note
		equal = check_gap_vs_ricci(from_networkx(networkx.cycle_graph(4)), 2.0)
		assert equal.passed and equal.note == "equality"
		assert not check_gap_vs_ricci(from_networkx(networkx.cycle_graph(8)), 1.0).passed

	def test_size_guard(self):
		big = Graph(settings.SPECTRAL_MAX_VERTICES + 1, [(i, i + 1) for i in range(settings.SPECTRAL_MAX_VERTICES)])
		self.assertRaises(SizeGuardError, spectral_gap, big)

	def test_elided_spectrum(self):
		small = spectral_gap(from_networkx(networkx.cycle_graph(5))).to_dict()
		assert len(small["spectrum"]) == 5
		large = spectral_gap(from_networkx(networkx.cycle_graph(settings.SPECTRUM_ELIDE_ABOVE + 1))).to_dict()
		assert "spectrum" not in large and "spectral_gap" in large

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestSpectral)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
