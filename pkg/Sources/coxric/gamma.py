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
Gamma calculus on graphs and the discrete Ricci curvature.

    Delta(f)(x)   = sum over v ~ x of (f(v) - f(x))
    Gamma(f,h)(x) = 1/2 sum over v ~ x of (f(x) - f(v))(h(x) - h(v))
    Gamma2(f)(x)  = 1/2 Delta(Gamma(f,f))(x) - Gamma(f, Delta f)(x)

Ric(G)_x is the infimum of Gamma2(f)(x) / Gamma(f)(x). With f(x) = 0, 2 Gamma2
is a quadratic form in the values y on B(1, x) and z on B(2, x):

    1/2 sum_u sum_{v in N_u} (z_u - 2 y_v)^2          u in B(2, x), N_u = B(1, u) & B(1, x)
  + (sum_v y_v)^2
  + sum over edges vw inside B(1, x) of 2 (y_v - y_w)^2 + 1/2 (y_v^2 + y_w^2)
  + sum_v (4 - d(x) - d(v)) / 2 * y_v^2

Each z_u only appears in its own square sum, so it is eliminated at
z_u = (2 / n_u) sum_{v in N_u} y_v, which leaves y^T M y. As Gamma(f)(x) is
1/2 |y|^2, Ric(G)_x is the smallest eigenvalue of M.
"""

from coxric        import settings
from coxric.graph  import ball, triangle_stats
from coxric.linalg import SymMatrix, sym_eigen
from coxric.models import CurvatureReport, RicciSummary, TriangleVerdict, EstimateReport
from coxric.errors import MissingValueError, NonZeroBaseError, GraphError
from coxric.worker import LocalWorker
from coxric.utils  import XorShift64Star
import itertools
import numpy
import math
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

# -----------------------------------------------------------------------------
#
#    LocalFunction
#
# -----------------------------------------------------------------------------
class LocalFunction(object):
	"""Real values around a base vertex. `values` is a dict vertex -> value,
	or a sequence giving a value to every vertex."""

	def __init__(self, base, values):
		self.base = base
		if isinstance(values, dict):
			self.values = dict((int(k), float(v)) for k, v in values.items())
		else:
			self.values = dict((i, float(v)) for i, v in enumerate(values))

	def __getitem__(self, vertex):
		try:
			return self.values[vertex]
		except KeyError:
			raise MissingValueError(vertex)

	def __contains__(self, vertex):
		return vertex in self.values

	def shifted(self, c):
		return LocalFunction(self.base, dict((k, v + c) for k, v in self.values.items()))

	def to_dict(self, labels=None):
		name = labels and (lambda v: labels[v]) or str
		return {"base": name(self.base), "values": dict((name(k), self.values[k]) for k in sorted(self.values))}

def random_local_function(g, x, rng, zero_base=True, low=-1.0, high=1.0):
	"""Uniform values on {x} u B(1, x) u B(2, x), drawn in vertex order."""
	support = sorted(g.distances(x, limit=2))
	values  = dict((v, rng.uniform(low, high)) for v in support)
	if zero_base:
		values[x] = 0.0
	return LocalFunction(x, values)

# -----------------------------------------------------------------------------
#
#    Operators
#
# -----------------------------------------------------------------------------
def delta_op(g, f, x):
	x  = g.check_vertex(x)
	fx = f[x]
	return sum(f[v] - fx for v in g.adj[x])

def gamma_op(g, f, h, x):
	x      = g.check_vertex(x)
	fx, hx = f[x], h[x]
	return 0.5 * sum((fx - f[v]) * (hx - h[v]) for v in g.adj[x])

def gamma2_def(g, f, x):
	"""Gamma2(f)(x) straight from the definition."""
	x          = g.check_vertex(x)
	sphere     = g.adj[x]
	gamma_x    = gamma_op(g, f, f, x)
	delta_x    = delta_op(g, f, x)
	half_delta = 0.5 * sum(gamma_op(g, f, f, v) - gamma_x for v in sphere)
	cross      = 0.5 * sum((f[x] - f[v]) * (delta_x - delta_op(g, f, v)) for v in sphere)
	return half_delta - cross

def _couplings(g, x):
	"""[(u, N_u)] for u in B(2, x), both sorted."""
	ring = g._neighbors[x]
	return [(u, sorted(v for v in g.adj[u] if v in ring)) for u in sorted(ball(g, x, 2))]

def gamma2_formula(g, f, x, with_triangles=True):
	"""Gamma2(f)(x) from the closed form, for f(x) = 0. Without the triangle
	term it is only exact on triangle-free neighbourhoods."""
	x = g.check_vertex(x)
	if f[x] != 0.0:
		raise NonZeroBaseError("closed form needs f(x) = 0, got f(%s) = %r" % (g.labels[x], f[x]))
	sphere = g.adj[x]
	ring   = g._neighbors[x]
	dx     = len(sphere)
	total  = 0.0
	for u, near in _couplings(g, x):
		total += 0.5 * sum((f[u] - 2.0 * f[v]) ** 2 for v in near)
	total += sum(f[v] for v in sphere) ** 2
	if with_triangles:
		for v in sphere:
			for w in g.adj[v]:
				if w in ring and v < w:
					total += 2.0 * (f[v] - f[w]) ** 2 + 0.5 * (f[v] ** 2 + f[w] ** 2)
	total += sum((4.0 - dx - g.degree(v)) / 2.0 * f[v] ** 2 for v in sphere)
	return total / 2.0

# -----------------------------------------------------------------------------
#
#    Reduced form and curvature
#
# -----------------------------------------------------------------------------
class ReducedForm(SymMatrix):
	"""M with min over B(2, x) of 2 Gamma2(f)(x) = y^T M y. Row i belongs to
	`basis[i]`; `couplings` lists (u, row indices of N_u)."""

	def __init__(self, data, base, basis, couplings):
		SymMatrix.__init__(self, data)
		self.base      = base
		self.basis     = basis
		self.couplings = couplings

	def extend(self, y):
		"""The LocalFunction with f(x) = 0, y on B(1, x) and the optimal z on B(2, x)."""
		values = {self.base: 0.0}
		for v, value in zip(self.basis, y):
			values[v] = float(value)
		for u, rows in self.couplings:
			values[u] = 2.0 / len(rows) * float(sum(y[_] for _ in rows))
		return LocalFunction(self.base, values)

def assemble_reduced_form(g, x):
	x      = g.require_degree(x)
	basis  = list(g.adj[x])
	row    = dict((v, i) for i, v in enumerate(basis))
	dx     = len(basis)
	M      = numpy.ones((dx, dx))
	pairs  = []
	for u, near in _couplings(g, x):
		rows = [row[v] for v in near]
		n_u  = float(len(rows))
		for i in rows:
			M[i, i] += 2.0
		M[numpy.ix_(rows, rows)] -= 2.0 / n_u
		pairs.append((u, rows))
	for v in basis:
		for w in g.adj[v]:
			if w in row and v < w:
				i, j = row[v], row[w]
				M[i, i] += 2.5
				M[j, j] += 2.5
				M[i, j] -= 2.0
				M[j, i] -= 2.0
	for v in basis:
		M[row[v], row[v]] += (4.0 - dx - g.degree(v)) / 2.0
	return ReducedForm(M, x, basis, pairs)

def local_ricci(g, x):
	"""Ric(G)_x as the least eigenvalue of the reduced form, with a minimizer
	normalized to f(x) = 0 and Gamma(f)(x) = 1."""
	form         = assemble_reduced_form(g, x)
	values, vecs = sym_eigen(form, vectors=True)
	y            = vecs[:, 0]
	leading      = numpy.flatnonzero(numpy.abs(y) > 1e-12)
	if len(leading) and y[leading[0]] < 0:
		y = -y
	y            = y * (math.sqrt(2.0) / numpy.linalg.norm(y))
	meta         = {
		"form_order"   : form.n,
		"sphere2_size" : len(form.couplings),
		"solver"       : form.n <= settings.JACOBI_MAX_ORDER and "jacobi" or "lapack",
		"eigen_tol"    : settings.EIGEN_TOL,
	}
	return CurvatureReport(form.base, float(values[0]), form.extend(y), label=g.labels[form.base], meta=meta)

def _local_ricci_job(args):
	g, x = args
	return local_ricci(g, x)

def local_ricci_all(g, vertices=None, workers=None):
	"""Reports for `vertices` (all by default), in the given order."""
	if not g.n:
		raise GraphError("empty graph")
	vertices = list(g.vertices()) if vertices is None else [g.check_vertex(_) for _ in vertices]
	return LocalWorker(workers).map(_local_ricci_job, [(g, _) for _ in vertices])

def global_ricci(g, transitive=False, workers=None):
	"""min over x of Ric(G)_x. With `transitive` the caller asserts vertex
	transitivity and only vertex 0 is computed."""
	if not g.n:
		raise GraphError("empty graph")
	if transitive:
		return local_ricci(g, 0).ric
	return min(_.ric for _ in local_ricci_all(g, workers=workers))

def ricci_summary(g, vertices=None, transitive=False, spot_check=None, seed=None, workers=None, emit_minimizer=False):
	"""RicciSummary for `vertices` (all by default, vertex 0 when transitive).
	`spot_check` vertices drawn with `seed` are compared to vertex 0."""
	if transitive and vertices is None:
		vertices = [0]
	reports = local_ricci_all(g, vertices, workers)
	spot    = None
	if spot_check:
		rng     = XorShift64Star(settings.DEFAULT_SEED if seed is None else seed)
		picked  = rng.sample(g.n, min(spot_check, g.n))
		base    = local_ricci(g, 0).ric
		values  = [_.ric for _ in local_ricci_all(g, picked, workers)]
		spot    = {
			"vertices"      : picked,
			"max_deviation" : max(abs(_ - base) for _ in values),
			"passed"        : all(abs(_ - base) <= settings.RICCI_TOL for _ in values),
		}
		if not spot["passed"]:
			warning("local curvature differs between vertices of", g.name, ": deviation", spot["max_deviation"])
	return RicciSummary(g.name, reports, transitive=transitive, spot_check=spot, emit_minimizer=emit_minimizer)

def certify(g, report):
	"""|Gamma2(m)(x) / Gamma(m)(x) - ric| for the reported minimizer m,
	evaluated through the definitional operators."""
	f = report.minimizer
	return abs(gamma2_def(g, f, report.vertex) / gamma_op(g, f, f, report.vertex) - report.ric)

def check_triangle_bound(g, ric):
	"""Ric <= 2 + T/2, T the largest number of triangles through an edge."""
	t_max = triangle_stats(g)[1]
	bound = 2.0 + t_max / 2.0
	return TriangleVerdict(t_max, ric, bound, ric <= bound + settings.RICCI_TOL)

# -----------------------------------------------------------------------------
#
#    Proof-step estimates
#
# -----------------------------------------------------------------------------
def _pair_sum(f, vertices):
	return sum((f[a] - f[b]) ** 2 for a, b in itertools.combinations(vertices, 2))

def _square_sum(g, f, x):
	return sum(sum((f[u] - 2.0 * f[v]) ** 2 for v in near) for u, near in _couplings(g, x))

def dihedral_estimate(g, f, x=0):
	"""On the Bruhat graph of a dihedral group with n reflections:
	sum_u sum_v (f(u) - 2 f(v))^2 >= (4/n)(n - 1) sum_{i<j} (f(s_i) - f(s_j))^2."""
	sphere = g.adj[g.require_degree(x)]
	n      = len(sphere)
	return EstimateReport("dihedral", _square_sum(g, f, x), 4.0 / n * (n - 1) * _pair_sum(f, sphere))

def general_estimate(g, f, x=0):
	"""1/2 sum_u sum_v (f(u) - 2 f(v))^2 >= sum over pairs {v, v'} of B(1, x)
	of (f(v) - f(v'))^2."""
	sphere = g.adj[g.require_degree(x)]
	return EstimateReport("general", 0.5 * _square_sum(g, f, x), _pair_sum(f, sphere))

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import networkx
from coxric.graph import Graph, from_networkx, two_ball_subgraph

def nx(G):
	return from_networkx(G)

def close(a, b, rtol=1e-10):
	return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))

class TestOperators(unittest.TestCase):

	def setUp(self):
		self.k2 = nx(networkx.complete_graph(2))
		self.c4 = nx(networkx.cycle_graph(4))

	def test_delta(self):
		assert delta_op(self.k2, LocalFunction(0, [0, 1]), 0) == 1
		assert delta_op(self.c4, LocalFunction(0, [0, 1, 0, -1]), 0) == 0
		assert delta_op(self.c4, LocalFunction(0, [3, 3, 3, 3]), 2) == 0

	def test_gamma(self):
		f = LocalFunction(0, [0, 1, 0, -1])
		assert gamma_op(self.k2, LocalFunction(0, [0, 1]), LocalFunction(0, [0, 1]), 0) == 0.5
		assert gamma_op(self.c4, f, f, 0) == 1
		assert gamma_op(self.c4, LocalFunction(0, [2] * 4), f, 1) == 0

	def test_gamma2(self):
		f = LocalFunction(0, [0, 1, 0, -1])
		assert close(gamma2_def(self.c4, f, 0), 2.0)
		assert close(gamma2_formula(self.c4, f, 0), 2.0)
		k2 = LocalFunction(0, [0, 1])
		assert close(gamma2_def(self.k2, k2, 0), 1.0)
		assert close(gamma2_formula(self.k2, k2, 0), 1.0)
		assert gamma2_def(self.c4, LocalFunction(0, [5] * 4), 0) == 0
		self.assertRaises(NonZeroBaseError, gamma2_formula, self.c4, LocalFunction(0, [1, 1, 0, -1]), 0)

	def test_missing_value(self):
		self.assertRaises(MissingValueError, gamma2_def, self.c4, LocalFunction(0, {0: 0.0, 1: 1.0, 3: 2.0}), 0)
		self.assertRaises(KeyError, delta_op, self.c4, LocalFunction(0, {0: 0.0}), 0)

	def test_shift_invariance(self):
		rng = XorShift64Star(17)
		g   = nx(networkx.gnp_random_graph(12, 0.4, seed=3))
		for x in g.vertices():
			if not g.degree(x):
				continue
			f, h = random_local_function(g, x, rng, False), random_local_function(g, x, rng, False)
			c, d = rng.uniform(-5, 5), rng.uniform(-5, 5)
			assert close(gamma2_def(g, f.shifted(c), x), gamma2_def(g, f, x))
			assert close(gamma_op(g, f.shifted(c), h.shifted(d), x), gamma_op(g, f, h, x))

	def test_formula_matches_definition_with_triangles(self):
		rng       = XorShift64Star(23)
		triangles = 0
		for seed in range(20):
			g = nx(networkx.gnp_random_graph(10, 0.45, seed=seed))
			triangles += triangle_stats(g)[1] > 0
			for x in g.vertices():
				if not g.degree(x):
					continue
				for _ in range(5):
					f = random_local_function(g, x, rng)
					assert close(gamma2_formula(g, f, x), gamma2_def(g, f, x)), (seed, x)
		assert triangles >= 15

	def test_triangle_free_specialization(self):
		rng = XorShift64Star(29)
		for G in (networkx.hypercube_graph(3), networkx.cycle_graph(7), networkx.petersen_graph()):
			g = nx(G)
			for x in g.vertices():
				f = random_local_function(g, x, rng)
				assert close(gamma2_formula(g, f, x, with_triangles=False), gamma2_def(g, f, x))

class TestCurvature(unittest.TestCase):

	def test_reduced_forms(self):
		numpy.testing.assert_allclose(assemble_reduced_form(nx(networkx.cycle_graph(4)), 0).data, [[2, 0], [0, 2]], atol=1e-15)
		numpy.testing.assert_allclose(assemble_reduced_form(nx(networkx.complete_graph(2)), 0).data, [[2]])
		numpy.testing.assert_allclose(assemble_reduced_form(nx(networkx.path_graph(3)), 1).data, [[1.5, 1], [1, 1.5]])
		numpy.testing.assert_allclose(assemble_reduced_form(nx(networkx.cycle_graph(5)), 0).data, [[1, 1], [1, 1]], atol=1e-15)

	def test_reduced_form_is_the_minimum(self):
		rng = XorShift64Star(31)
		g   = nx(networkx.gnp_random_graph(11, 0.4, seed=5))
		for x in g.vertices():
			if not g.degree(x):
				continue
			form = assemble_reduced_form(g, x)
			y    = rng.vector(form.n)
			f    = form.extend(y)
			assert close(2.0 * gamma2_def(g, f, x), form.quadratic(y))
			# moving a B(2, x) value away from its optimum can only increase Gamma2
			for u, _ in form.couplings[:3]:
				bumped = dict(f.values)
				bumped[u] += 0.1
				assert gamma2_def(g, LocalFunction(x, bumped), x) > gamma2_def(g, f, x)

	def test_local_ricci_examples(self):
		expected = [
			(networkx.complete_graph(2), 0, 2.0),
			(networkx.cycle_graph(4), 0, 2.0),
			(networkx.cycle_graph(5), 0, 0.0),
			(networkx.cycle_graph(6), 2, 0.0),
			(networkx.path_graph(3), 1, 0.5),
			(networkx.complete_graph(4), 0, 3.0),
		]
		for G, x, ric in expected:
			assert abs(local_ricci(nx(G), x).ric - ric) < 1e-9, (G, x)

	def test_global_ricci(self):
		assert abs(global_ricci(nx(networkx.complete_graph(2))) - 2) < 1e-9
		assert abs(global_ricci(nx(networkx.cycle_graph(6)))) < 1e-9
		assert abs(global_ricci(nx(networkx.hypercube_graph(3))) - 2) < 1e-9
		assert abs(global_ricci(nx(networkx.cycle_graph(4)), transitive=True) - 2) < 1e-9
		self.assertRaises(GraphError, global_ricci, Graph(0))
		self.assertRaises(GraphError, local_ricci, Graph(3, [(0, 1)]), 2)

	def test_minimizer_certificate(self):
		for G in (networkx.petersen_graph(), networkx.gnp_random_graph(9, 0.5, seed=2), networkx.cycle_graph(5)):
			g = nx(G)
			for x in g.vertices():
				if not g.degree(x):
					continue
				report = local_ricci(g, x)
				f      = report.minimizer
				assert f[x] == 0.0
				assert abs(gamma_op(g, f, f, x) - 1.0) < 1e-9
				assert certify(g, report) < 1e-8

	def test_locality(self):
		g = nx(networkx.gnp_random_graph(14, 0.3, seed=8))
		for x in g.vertices():
			if g.degree(x):
				assert abs(local_ricci(g, x).ric - local_ricci(two_ball_subgraph(g, x), 0).ric) < 1e-9

	def test_triangle_bound(self):
		for G in (networkx.complete_graph(4), networkx.cycle_graph(6), networkx.hypercube_graph(3), networkx.gnp_random_graph(12, 0.5, seed=4)):
			g = nx(G)
			if min(g.degrees()) == 0:
				continue
			verdict = check_triangle_bound(g, global_ricci(g))
			assert verdict.passed, verdict.to_dict()
		assert check_triangle_bound(nx(networkx.complete_graph(4)), 3.0).bound == 3.0

	def test_summary_spot_check(self):
		summary = ricci_summary(nx(networkx.hypercube_graph(3)), transitive=True, spot_check=4, seed=1)
		assert len(summary.reports) == 1 and summary.spot_check["passed"]
		assert abs(summary.global_ric - 2.0) < 1e-9
		assert "minimizer" in ricci_summary(nx(networkx.cycle_graph(4)), emit_minimizer=True).to_dict()["vertices"][0]

	def test_estimates_on_cycles(self):
		# K(m, m) is the Bruhat graph of I2(m)
		rng = XorShift64Star(37)
		for m in range(2, 7):
			g = nx(networkx.complete_bipartite_graph(m, m))
			for _ in range(20):
				f = random_local_function(g, 0, rng)
				assert dihedral_estimate(g, f).passed
				assert general_estimate(g, f).passed

if __name__ == "__main__":
	suite = unittest.TestSuite()
	suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestOperators))
	suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestCurvature))
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
