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
Edge boundaries and the isoperimetric inequalities of positively curved
graphs:

    |dA| >= 1/2 min(sqrt(lambda), lambda / sqrt(2|K|)) |A| (1 - |A|/|V|)

with lambda the spectral gap and K the curvature and, for Bruhat graphs
(lambda >= 2, K = 2), |dA| >= 1/2 |A| (1 - |A|/|V|).

Subsets are either all enumerated (small graphs) or drawn from seeded
XorShift64Star streams, one stream per chunk of ISO_CHUNK_SIZE samples
(seed + chunk index) and one for the stratified pass, so the subsets do
not depend on the number of workers.
"""

from coxric          import settings
from coxric.models   import IsoReport, IsoSummary
from coxric.errors   import GraphError, HypothesisError, SizeGuardError
from coxric.utils    import XorShift64Star
from coxric.worker   import LocalWorker
import numpy
import math
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

EXHAUSTIVE_CHUNK = 1 << 14

def _mask(g, A):
	mask = numpy.zeros(g.n, dtype=bool)
	for v in A:
		mask[g.check_vertex(v)] = True
	return mask

def boundary_size(g, A):
	"""Number of edges with exactly one endpoint in A."""
	U, V = g.edge_array()
	mask = _mask(g, A)
	return int((mask[U] != mask[V]).sum())

def iso_bound(size_a, size_v, lam, K):
	if K == 0:
		raise HypothesisError("the isoperimetric bound needs a nonzero curvature K")
	if lam is None or lam <= 0:
		raise HypothesisError("the isoperimetric bound needs a positive spectral gap, got %r" % (lam,))
	return 0.5 * min(math.sqrt(lam), lam / math.sqrt(2.0 * abs(K))) * ((size_a * (size_v - size_a)) / float(size_v))

def bruhat_bound(size_a, size_v):
	return 0.5 * ((size_a * (size_v - size_a)) / float(size_v))

def _curvature_applies(lam, K):
	return bool(K) and lam is not None and lam > 0

def _bounds(size_a, size_v, lam, K, bruhat=True):
	curved = iso_bound(size_a, size_v, lam, K) if _curvature_applies(lam, K) else None
	return curved, bruhat_bound(size_a, size_v) if bruhat else None

def _report(descriptor, members, boundary, n, lam, K, bruhat=True):
	curved, bruhat = _bounds(len(members), n, lam, K, bruhat)
	return IsoReport(descriptor, len(members), boundary, curved, bruhat, members=members)

# -----------------------------------------------------------------------------
#
#    Sampling jobs
#
# -----------------------------------------------------------------------------
def _sample_chunk(job):
	"""Uniform subsets: each vertex in with probability 1/2."""
	n, U, V, seed, chunk, count, lam, K, bruhat = job
	rng     = XorShift64Star(seed)
	reports = []
	for index in range(count):
		mask    = numpy.array(rng.bits(n), dtype=bool)
		members = numpy.flatnonzero(mask).tolist()
		reports.append(_report({"pass": "sampled", "seed": seed, "chunk": chunk, "index": index},
			members, int((mask[U] != mask[V]).sum()), n, lam, K, bruhat))
	return reports

def _stratified_pass(job):
	"""One uniform subset of each size 1..n-1."""
	n, U, V, seed, chunk, lam, K, bruhat = job
	rng     = XorShift64Star(seed)
	reports = []
	for size in range(1, n):
		members = rng.sample(n, size)
		mask    = numpy.zeros(n, dtype=bool)
		mask[members] = True
		reports.append(_report({"pass": "stratified", "seed": seed, "chunk": chunk, "index": size},
			members, int((mask[U] != mask[V]).sum()), n, lam, K, bruhat))
	return reports

def _exhaustive(g, lam, K, bruhat=True):
	"""All 2^n subsets, vectorized by bit masks. Keeps the tightest subset
	of each size and every failure."""
	n       = g.n
	U, V    = g.edge_array()
	shifts  = numpy.arange(n, dtype=numpy.int64)
	kept    = {}
	failed  = []
	for start in range(0, 1 << n, EXHAUSTIVE_CHUNK):
		masks    = numpy.arange(start, min(start + EXHAUSTIVE_CHUNK, 1 << n), dtype=numpy.int64)
		bits     = ((masks[:, None] >> shifts[None, :]) & 1).astype(bool)
		sizes    = bits.sum(axis=1)
		boundary = (bits[:, U] != bits[:, V]).sum(axis=1)
		spread   = (sizes * (n - sizes)) / float(n)
		bound    = 0.5 * spread if bruhat else numpy.zeros(len(masks))
		if _curvature_applies(lam, K):
			bound = numpy.maximum(bound, 0.5 * min(math.sqrt(lam), lam / math.sqrt(2.0 * abs(K))) * spread)
		slack    = boundary - bound
		for i in numpy.flatnonzero(slack < -settings.ISO_SLACK_TOL):
			failed.append(int(masks[i]))
		for size in numpy.unique(sizes):
			rows = numpy.flatnonzero(sizes == size)
			best = rows[numpy.argmin(slack[rows])]
			if size not in kept or slack[best] < kept[size][1]:
				kept[int(size)] = (int(masks[best]), float(slack[best]))
	picked  = sorted(set([_[0] for _ in kept.values()] + failed))
	reports = []
	for mask in picked:
		members = [v for v in range(n) if (mask >> v) & 1]
		reports.append(_report({"pass": "exhaustive", "index": mask}, members, boundary_size(g, members), n, lam, K, bruhat))
	return reports

# -----------------------------------------------------------------------------
#
#    Verification
#
# -----------------------------------------------------------------------------
def verify_isoperimetry(g, mode="sampled", seed=None, samples=None, lam=None, K=None, stratified=True, workers=None, force=False, bruhat=True):
	"""Checks |dA| against the bounds over the subsets chosen by `mode`
	("exhaustive" or "sampled"). `lam` and `K` default to the measured spectral
	gap and curvature of g. The curvature bound applies whenever K != 0 and
	lambda > 0, whatever the sign of K; the Bruhat graph bound only with
	`bruhat`, and at least one must apply."""
	if mode not in ("exhaustive", "sampled"):
		raise ValueError("unknown isoperimetry mode %r" % (mode,))
	if not g.n:
		raise GraphError("empty graph")
	if mode == "exhaustive" and g.n > settings.EXHAUSTIVE_MAX_VERTICES:
		raise SizeGuardError("exhaustive subset enumeration of %s" % (g.name or "graph"), g.n,
			settings.EXHAUSTIVE_MAX_VERTICES, hint="use sampling")
	seed    = settings.DEFAULT_SEED if seed is None else seed
	samples = settings.DEFAULT_SAMPLES if samples is None else samples
	if lam is None:
		from coxric.spectral import spectral_gap
		lam = spectral_gap(g, force).gap
	if K is None:
		from coxric.gamma import global_ricci
		K = global_ricci(g, workers=workers)
	if not bruhat and not _curvature_applies(lam, K):
		raise HypothesisError("no isoperimetric bound applies: lambda = %r, K = %r" % (lam, K))
	if mode == "exhaustive":
		reports = _exhaustive(g, lam, K, bruhat)
		tested  = 1 << g.n
	else:
		U, V    = g.edge_array()
		size    = settings.ISO_CHUNK_SIZE
		chunks  = (samples + size - 1) // size
		worker  = LocalWorker(workers)
		jobs    = [(g.n, U, V, seed + c, c, min(size, samples - c * size), lam, K, bruhat) for c in range(chunks)]
		reports = [_ for batch in worker.map(_sample_chunk, jobs) for _ in batch]
		tested  = samples
		if stratified and g.n > 1:
			reports += _stratified_pass((g.n, U, V, seed + chunks, chunks, lam, K, bruhat))
			tested  += g.n - 1
	summary = IsoSummary(mode, g.n, tested, reports, lam, K, seed=seed)
	if not summary.passed:
		error(len(summary.failures), "subsets of", g.name, "violate the isoperimetric bounds")
	info("isoperimetry on", g.name, ":", tested, "subsets, min slack", summary.min_slack)
	return summary

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import networkx
from coxric.graph import from_networkx, Graph

class TestIsoperimetry(unittest.TestCase):

	def setUp(self):
		self.k33 = from_networkx(networkx.complete_bipartite_graph(3, 3), name="K33")
		self.c4  = from_networkx(networkx.cycle_graph(4), name="C4")

	def test_boundary_size(self):
		assert boundary_size(self.k33, [0, 1, 2]) == 9
		assert boundary_size(self.c4, [0]) == 2
		assert boundary_size(self.c4, range(4)) == 0
		self.assertRaises(GraphError, boundary_size, self.c4, [7])

	def test_complement_symmetry(self):
		rng = XorShift64Star(2)
		g   = from_networkx(networkx.petersen_graph())
		for _ in range(20):
			A    = [v for v, bit in enumerate(rng.bits(g.n)) if bit]
			rest = [v for v in g.vertices() if v not in A]
			assert boundary_size(g, A) == boundary_size(g, rest)
			assert bruhat_bound(len(A), g.n) == bruhat_bound(len(rest), g.n)

	def test_bounds_are_exactly_symmetric(self):
		for n in range(2, 200):
			for a in range(1, n):
				assert bruhat_bound(a, n) == bruhat_bound(n - a, n), (a, n)
				assert iso_bound(a, n, 0.382, -0.5) == iso_bound(n - a, n, 0.382, -0.5), (a, n)

	def test_iso_bound(self):
		assert abs(iso_bound(3, 6, 3.0, 2.0) - 1.125) < 1e-12
		assert iso_bound(6, 6, 3.0, 2.0) == 0.0
		assert abs(iso_bound(3, 6, 2.0, 2.0) - 0.75) < 1e-12
		assert abs(iso_bound(3, 6, 2.0, 2.0) - bruhat_bound(3, 6)) < 1e-12
		self.assertRaises(HypothesisError, iso_bound, 3, 6, 3.0, 0)
		self.assertRaises(HypothesisError, iso_bound, 3, 6, 0.0, 2.0)

	def test_exhaustive(self):
		k2      = from_networkx(networkx.complete_graph(2))
		summary = verify_isoperimetry(k2, mode="exhaustive", lam=2.0, K=2.0)
		assert summary.tested == 4 and summary.passed
		summary = verify_isoperimetry(self.k33, mode="exhaustive", lam=3.0, K=2.0)
		assert summary.tested == 64 and summary.passed
		assert [_.size for _ in summary.tightest()] == list(range(7))

	def test_exhaustive_finds_failures(self):
		# a long path has a much smaller gap than the claimed lambda
		path    = from_networkx(networkx.path_graph(12))
		summary = verify_isoperimetry(path, mode="exhaustive", lam=2.0, K=2.0)
		assert not summary.passed
		assert all(not _.passed for _ in summary.failures)

	def test_exhaustive_guard(self):
		big = from_networkx(networkx.cycle_graph(settings.EXHAUSTIVE_MAX_VERTICES + 1))
		self.assertRaises(SizeGuardError, verify_isoperimetry, big, "exhaustive", None, None, 1.0, 1.0)

	def test_sampled_is_deterministic(self):
		g = from_networkx(networkx.hypercube_graph(4))
		a = verify_isoperimetry(g, seed=7, samples=2500, lam=2.0, K=2.0)
		b = verify_isoperimetry(g, seed=7, samples=2500, lam=2.0, K=2.0, workers=2)
		assert a.tested == 2500 + 15 and a.passed
		assert [(_.size, _.boundary) for _ in a.reports] == [(_.size, _.boundary) for _ in b.reports]
		c = verify_isoperimetry(g, seed=8, samples=2500, lam=2.0, K=2.0)
		assert [_.boundary for _ in a.reports] != [_.boundary for _ in c.reports]

	def test_measured_defaults(self):
		summary = verify_isoperimetry(self.c4, mode="exhaustive")
		assert abs(summary.lam - 2.0) < 1e-9 and abs(summary.ric - 2.0) < 1e-9
		assert summary.passed

	def test_without_bruhat_bound(self):
		summary = verify_isoperimetry(self.k33, mode="exhaustive", lam=3.0, K=2.0, bruhat=False)
		assert summary.passed
		assert all(_.bruhat_bound is None and _.curvature_bound is not None for _ in summary.reports)
		c6 = from_networkx(networkx.cycle_graph(6))
		self.assertRaises(HypothesisError, verify_isoperimetry, c6, "exhaustive", None, None, 1.0, 0.0, True, None, False, False)

	def test_negative_curvature(self):
		# a centre with three legs of length 2
		spider  = from_networkx(networkx.Graph([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]), name="spider")
		summary = verify_isoperimetry(spider, mode="exhaustive", bruhat=False)
		assert summary.ric < 0 and summary.lam > 0
		assert summary.passed and summary.tested == 1 << 7
		assert all(_.bruhat_bound is None and _.curvature_bound is not None for _ in summary.reports)
		assert abs(iso_bound(3, 7, 1.0, -2.0) - iso_bound(3, 7, 1.0, 2.0)) < 1e-15
		sampled = verify_isoperimetry(spider, seed=5, samples=300, bruhat=False)
		assert sampled.passed and all(_.curvature_bound is not None for _ in sampled.reports)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestIsoperimetry)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
