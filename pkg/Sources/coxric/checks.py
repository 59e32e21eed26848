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
The invariant suite behind `coxric check`, and the acceptance tests.

Each check either returns a detail dictionary (PASS), raises CheckFailure
with a counterexample payload (FAIL), or hits a size guard (SKIP).
"""

from coxric          import settings
from coxric.models   import CheckResult, PASS, FAIL, SKIP
from coxric.errors   import CheckFailure, SizeGuardError
from coxric.graph    import triangle_stats, two_ball_subgraph
from coxric.utils    import XorShift64Star, histogram
import coxric.gamma        as gamma
import coxric.spectral     as spectral
import coxric.isoperimetry as isoperimetry
import coxric.dihedral     as dihedral
import numpy
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

def _require(condition, message, **payload):
	if not condition:
		raise CheckFailure(message, payload)

class CheckSuite(object):

	CHECKS = ("roots", "group", "bruhat_graph", "left_translation", "curvature", "symmetry", "certificate",
		"locality", "triangle_bound", "oracle", "estimates", "spectral", "isoperimetry", "structure", "quadruples")

	def __init__(self, subject, seed=None, samples=None, workers=None):
		self.subject = subject
		self.grp     = subject.require_group("check")
		self.rs      = subject.rs
		self.g       = subject.graph
		self.seed    = settings.DEFAULT_SEED if seed is None else seed
		self.samples = samples
		self.workers = workers
		self.ric     = None
		self.gap     = None
		self._local  = {}

	def vertices(self):
		"""Every vertex up to ALL_VERTICES_MAX_ORDER, else e and a seeded sample."""
		if self.g.n <= settings.ALL_VERTICES_MAX_ORDER:
			return list(self.g.vertices())
		picked = XorShift64Star(self.seed).sample(self.g.n, min(settings.SPOT_CHECK_VERTICES, self.g.n))
		return sorted(set([0] + list(picked)))

	def local(self, vertices):
		missing = [_ for _ in vertices if _ not in self._local]
		for report in gamma.local_ricci_all(self.g, missing, self.workers):
			self._local[report.vertex] = report.ric
		return [self._local[_] for _ in vertices]

	def run(self):
		results = [self.run_one(_) for _ in self.CHECKS]
		failed  = [_.name for _ in results if _.status == FAIL]
		if failed:
			error("checks failed on", self.grp.name, ":", failed)
		return results

	def run_one(self, name):
		try:
			detail = getattr(self, "check_%s" % (name))()
		except SizeGuardError as e:
			info("check", name, "skipped:", e)
			return CheckResult(name, SKIP, {"reason": str(e)})
		except CheckFailure as e:
			detail = dict(e.payload)
			detail["message"] = str(e)
			return CheckResult(name, FAIL, detail)
		return CheckResult(name, PASS, detail)

	# -------------------------------------------------------------------------
	#    Roots, group, graph
	# -------------------------------------------------------------------------
	def check_roots(self):
		rs    = self.rs
		norms = numpy.einsum("ij,jk,ik->i", rs.coords, rs.form, rs.coords)
		worst = float(numpy.abs(norms - 1.0).max())
		_require(len(rs) == 2 * rs.N, "roots are not split in two halves", roots=len(rs), positive=rs.N)
		_require(len(self.grp.reflections) == rs.N, "|T| differs from the number of positive roots",
			reflections=len(self.grp.reflections), positive=rs.N)
		_require(worst <= settings.ROOT_NORM_TOL, "a root is not a unit vector", deviation=worst)
		return {"roots": len(rs), "positive": rs.N}

	def check_group(self):
		grp     = self.grp
		longest = int(grp.length_of[grp.longest_element()])
		_require(longest == self.rs.N, "the longest element has the wrong length", longest=longest, positive=self.rs.N)
		counts  = list(histogram(grp.length_of).values())
		_require(counts == counts[::-1], "length distribution is not palindromic", lengths=counts)
		for i, si in enumerate(grp.simple):
			for j, sj in enumerate(grp.simple):
				order = grp.order_of(grp.mult(si, sj))
				_require(order == self.subject.cm[i][j], "Coxeter relation fails", i=i, j=j, order=order,
					expected=self.subject.cm[i][j])
		return {"order": grp.order, "longest": longest}

	def check_bruhat_graph(self):
		g       = self.g
		degrees = set(g.degrees().tolist())
		_require(degrees == set([self.rs.N]), "the Bruhat graph is not |T|-regular", degrees=sorted(degrees))
		_require(g.is_connected(), "the Bruhat graph is disconnected")
		t_max   = triangle_stats(g)[1]
		_require(t_max == 0, "the Bruhat graph has triangles", T_max=t_max)
		U, V    = g.edge_array()
		parity  = self.grp.length_of
		same    = numpy.flatnonzero(parity[U] % 2 == parity[V] % 2)
		if len(same):
			raise CheckFailure("an edge joins two elements of the same length parity", {"edge": [int(U[same[0]]), int(V[same[0]])]})
		return {"vertices": g.n, "edges": g.edge_count(), "degree": self.rs.N, "T_max": t_max}

	def check_left_translation(self):
		g = self.g
		for s in self.grp.simple:
			image = self.grp.left_translation(s)
			for u, v in g.edges():
				_require(g.has_edge(int(image[u]), int(image[v])), "left translation breaks an edge",
					generator=self.grp.label(s), edge=[u, v])
		return {"generators": len(self.grp.simple)}

	# -------------------------------------------------------------------------
	#    Curvature
	# -------------------------------------------------------------------------
	def check_curvature(self):
		summary  = gamma.ricci_summary(self.g, transitive=True, spot_check=settings.SPOT_CHECK_VERTICES,
			seed=self.seed, workers=self.workers)
		self.ric = summary.global_ric
		self._local[0] = self.ric
		_require(abs(self.ric - 2.0) <= settings.RICCI_TOL, "curvature of the Bruhat graph is not 2", ric=self.ric)
		_require(summary.spot_check["passed"], "local curvatures differ", spot_check=summary.spot_check)
		return {"ric": self.ric, "spot_check": summary.spot_check}

	def check_symmetry(self):
		vertices = self.vertices()
		values   = self.local(vertices)
		spread   = max(values) - min(values)
		_require(spread <= settings.RICCI_TOL, "local curvature depends on the vertex", spread=spread,
			vertices=[vertices[int(numpy.argmin(values))], vertices[int(numpy.argmax(values))]])
		return {"vertices": len(vertices), "spread": spread}

	def check_certificate(self):
		report = gamma.local_ricci(self.g, 0)
		f      = report.minimizer
		drift  = gamma.certify(self.g, report)
		_require(f[0] == 0.0 and abs(gamma.gamma_op(self.g, f, f, 0) - 1.0) <= settings.RICCI_TOL,
			"the minimizer is not normalized")
		_require(drift <= settings.RICCI_TOL, "the minimizer does not attain the curvature", error=drift)
		return {"error": drift}

	def check_locality(self):
		worst = 0.0
		for x, ric in zip(self.vertices(), self.local(self.vertices())):
			local = gamma.local_ricci(two_ball_subgraph(self.g, x), 0).ric
			worst = max(worst, abs(local - ric))
			_require(worst <= settings.RICCI_TOL, "curvature differs on the two-ball subgraph", vertex=x, full=ric, two_ball=local)
		return {"vertices": len(self.vertices()), "max_deviation": worst}

	def check_triangle_bound(self):
		verdict = gamma.check_triangle_bound(self.g, self.ric if self.ric is not None else gamma.local_ricci(self.g, 0).ric)
		_require(verdict.passed, "Ric exceeds 2 + T/2", **verdict.to_dict())
		return verdict.to_dict()

	def check_oracle(self):
		rng      = XorShift64Star(self.seed)
		vertices = self.vertices()
		ric      = self.ric if self.ric is not None else gamma.local_ricci(self.g, 0).ric
		worst    = 0.0
		quotient = None
		for i in range(settings.RANDOM_FUNCTIONS):
			x     = vertices[i % len(vertices)]
			f     = gamma.random_local_function(self.g, x, rng)
			a, b  = gamma.gamma2_formula(self.g, f, x), gamma.gamma2_def(self.g, f, x)
			worst = max(worst, abs(a - b) / max(1.0, abs(a), abs(b)))
			_require(worst <= settings.ORACLE_RTOL, "closed form and definition of Gamma2 disagree", vertex=x,
				formula=a, definition=b)
			q     = b / gamma.gamma_op(self.g, f, f, x)
			quotient = q if quotient is None else min(quotient, q)
			_require(q >= ric - settings.RICCI_TOL, "a function beats the curvature", vertex=x, quotient=q, ric=ric)
		return {"functions": settings.RANDOM_FUNCTIONS, "max_relative_error": worst, "min_quotient": quotient}

	def check_estimates(self):
		rng      = XorShift64Star(self.seed + 1)
		dihedral = self.rs.rank == 2
		slack    = {"general": None, "dihedral": None}
		for _ in range(settings.ESTIMATE_FUNCTIONS):
			f = gamma.random_local_function(self.g, 0, rng)
			estimates = [gamma.general_estimate(self.g, f)]
			if dihedral:
				estimates.append(gamma.dihedral_estimate(self.g, f))
			for estimate in estimates:
				_require(estimate.passed, "the %s estimate fails" % (estimate.name), **estimate.to_dict())
				if slack[estimate.name] is None or estimate.slack < slack[estimate.name]:
					slack[estimate.name] = estimate.slack
		return {"functions": settings.ESTIMATE_FUNCTIONS, "min_slack": slack}

	# -------------------------------------------------------------------------
	#    Spectral gap and isoperimetry
	# -------------------------------------------------------------------------
	def check_spectral(self):
		report   = spectral.spectral_gap(self.g, self.subject.force)
		self.gap = report.gap
		_require(self.gap is not None and self.gap >= 2.0 - settings.GAP_TOL, "spectral gap below 2", gap=self.gap)
		versus   = spectral.check_gap_vs_ricci(report, self.ric if self.ric is not None else 2.0)
		_require(versus.passed, "spectral gap below the curvature", **versus.to_dict())
		return {"gap": self.gap, "gap_vs_ricci": versus.to_dict()}

	def check_isoperimetry(self):
		mode    = self.g.n <= settings.EXHAUSTIVE_MAX_VERTICES and "exhaustive" or "sampled"
		summary = isoperimetry.verify_isoperimetry(self.g, mode, seed=self.seed, samples=self.samples, lam=self.gap,
			K=self.ric, workers=self.workers, force=self.subject.force)
		_require(summary.passed, "a subset violates the isoperimetric bounds",
			failures=[_.to_dict() for _ in summary.failures[:5]])
		return {"mode": mode, "tested": summary.tested, "min_slack": summary.min_slack}

	# -------------------------------------------------------------------------
	#    Dihedral structure
	# -------------------------------------------------------------------------
	def check_structure(self):
		report = dihedral.verify_structure(self.grp)
		data   = report.to_dict()
		failed = sorted(k for k, v in data["checks"].items() if v["verdict"] == FAIL)
		_require(not failed, "structure checks fail", failed=failed,
			counterexamples=dict((k, data["checks"][k]["counterexamples"]) for k in failed))
		return {"classes": len(report.classes), "sphere2_size": report.sphere_size, "flags": len(report.flags)}

	def check_quadruples(self):
		result = dihedral.verify_lemma_dyer(self.grp, seed=self.seed)
		_require(result["passed"], "four reflections with equal products generate a non-dihedral group",
			failures=result["failures"])
		return result

def run_checks(subject, seed=None, samples=None, workers=None):
	"""CheckResult list, in CheckSuite.CHECKS order."""
	return CheckSuite(subject, seed=seed, samples=samples, workers=workers).run()

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import tempfile
import networkx
import os
from coxric.graph import from_networkx

CORPUS  = ("A1", "A1xA1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4") + tuple("I2(%d)" % (m) for m in range(2, 9))
_CACHE  = {}

def subject(spec):
	from coxric.operations import Subject
	if spec not in _CACHE:
		_CACHE[spec] = Subject(spec)
	return _CACHE[spec]

def nx(G):
	return from_networkx(G)

class TestChecks(unittest.TestCase):

	def test_all_pass(self):
		results = run_checks(subject("A2"))
		assert [_.name for _ in results] == list(CheckSuite.CHECKS)
		assert all(_.status == PASS for _ in results), [_.to_dict() for _ in results if _.status != PASS]

	def test_skip_on_size_guard(self):
		previous = settings.update({"SPECTRAL_MAX_VERTICES": 3})
		try:
			results = dict((_.name, _) for _ in run_checks(subject("A2")))
		finally:
			settings.update(previous)
		assert results["spectral"].status == SKIP and "reason" in results["spectral"].detail
		assert results["isoperimetry"].status == SKIP
		assert results["curvature"].status == PASS

	def test_fail_carries_payload(self):
		previous = settings.update({"RICCI_TOL": -1.0})
		try:
			results = dict((_.name, _) for _ in run_checks(subject("I2(3)")))
		finally:
			settings.update(previous)
		assert results["curvature"].status == FAIL
		assert "ric" in results["curvature"].detail and "message" in results["curvature"].detail

class TestAcceptance(unittest.TestCase):

	def test_bruhat_curvature_is_two(self):
		for spec in CORPUS:
			g = subject(spec).graph
			if g.n <= settings.ALL_VERTICES_MAX_ORDER:
				ric = gamma.global_ricci(g)
			else:
				summary = gamma.ricci_summary(g, transitive=True, spot_check=20, seed=settings.DEFAULT_SEED)
				assert summary.spot_check["passed"], spec
				ric = summary.global_ric
			assert abs(ric - 2.0) < 1e-8, (spec, ric)

	def test_spectral_gap(self):
		for spec in CORPUS:
			g = subject(spec).graph
			if g.n <= 1200:
				assert spectral.spectral_gap(g).gap >= 2.0 - 1e-8, spec
		assert abs(spectral.spectral_gap(subject("A2").graph).gap - 3.0) < 1e-8
		assert abs(spectral.spectral_gap(subject("I2(2)").graph).gap - 2.0) < 1e-8

	def test_operator_oracle(self):
		rng    = XorShift64Star(3)
		graphs = [subject(_).graph for _ in CORPUS]
		with_triangles = [nx(networkx.gnp_random_graph(12, 0.5, seed=s)) for s in range(40)]
		with_triangles = [g for g in with_triangles if triangle_stats(g)[1] > 0][:20]
		assert len(with_triangles) == 20
		for g in graphs + with_triangles:
			for _ in range(100):
				x = rng.randbelow(g.n)
				if not g.degree(x):
					continue
				f = gamma.random_local_function(g, x, rng)
				a, b = gamma.gamma2_formula(g, f, x), gamma.gamma2_def(g, f, x)
				assert abs(a - b) <= 1e-10 * max(1.0, abs(a), abs(b)), (g.name, x)

	def test_triangle_freeness(self):
		for spec in CORPUS:
			g = subject(spec).graph
			assert triangle_stats(g)[1] == 0, spec
			assert gamma.check_triangle_bound(g, gamma.local_ricci(g, 0).ric).bound == 2.0
		for G, bound in ((networkx.complete_graph(4), 3.0), (networkx.cycle_graph(6), 2.0), (networkx.hypercube_graph(3), 2.0)):
			g       = nx(G)
			verdict = gamma.check_triangle_bound(g, gamma.global_ricci(g))
			assert verdict.passed and verdict.bound == bound
			assert verdict.ric <= verdict.bound + 1e-9 and verdict.bound <= 4.0
		k4 = gamma.check_triangle_bound(nx(networkx.complete_graph(4)), gamma.global_ricci(nx(networkx.complete_graph(4))))
		assert k4.t_max == 2 and abs(k4.slack) < 1e-8

	def test_non_coxeter_oracles(self):
		assert abs(gamma.global_ricci(nx(networkx.complete_graph(2))) - 2) < 1e-9
		assert abs(gamma.global_ricci(nx(networkx.cycle_graph(4))) - 2) < 1e-9
		assert abs(gamma.global_ricci(nx(networkx.cycle_graph(5)))) < 1e-9
		assert abs(gamma.global_ricci(nx(networkx.cycle_graph(6)))) < 1e-9
		assert abs(gamma.local_ricci(nx(networkx.path_graph(3)), 1).ric - 0.5) < 1e-9

	def test_isoperimetry(self):
		for spec in ("A1", "A1xA1", "A2", "I2(4)", "I2(5)", "I2(6)"):
			summary = isoperimetry.verify_isoperimetry(subject(spec).graph, "exhaustive", K=2.0)
			assert summary.passed and summary.tested == 1 << subject(spec).graph.n, spec
		for spec in ("A3", "B3", "D4", "H3", "A4"):
			summary = isoperimetry.verify_isoperimetry(subject(spec).graph, "sampled", seed=42, samples=10000, K=2.0)
			assert summary.passed, (spec, [_.to_dict() for _ in summary.failures[:3]])
			assert summary.tested == 10000 + subject(spec).graph.n - 1

	def test_structure_suite(self):
		for spec in ("A2", "A3", "B3", "B4", "D4", "H3", "F4"):
			report = dihedral.verify_structure(subject(spec).group)
			assert report.passed, (spec, report.to_dict()["checks"])
		b4     = subject("B4").group
		report = dihedral.verify_structure(b4)
		found  = [c for c in report.classes if len(c.members) == 3 and len(c.subgroup.reflections) == 4]
		assert found
		flagged = set(_["u"] for _ in report.flags)
		assert any(u in flagged for c in found for u in c.members)

	def test_proof_step_estimates(self):
		rng = XorShift64Star(8)
		for spec in ("I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "A2", "A3", "B3"):
			sub = subject(spec)
			for _ in range(1000):
				f = gamma.random_local_function(sub.graph, 0, rng)
				assert gamma.general_estimate(sub.graph, f).slack >= -1e-9, spec
				if sub.rs.rank == 2:
					assert gamma.dihedral_estimate(sub.graph, f).slack >= -1e-9, spec

	def test_locality_and_symmetry(self):
		for spec in ("A3", "B3"):
			g = subject(spec).graph
			for report in gamma.local_ricci_all(g):
				assert abs(report.ric - gamma.local_ricci(two_ball_subgraph(g, report.vertex), 0).ric) < 1e-9
		for spec in CORPUS:
			suite  = CheckSuite(subject(spec))
			values = suite.local(suite.vertices())
			assert max(values) - min(values) < 1e-9, spec

	def test_determinism(self):
		from coxric.cli import main
		outputs = []
		for _ in range(2):
			fd, path = tempfile.mkstemp(suffix=".json")
			os.close(fd)
			try:
				assert main(["check", "A3", "--seed", "7", "--json", "--out", path]) == 0
				with open(path, "rb") as f:
					outputs.append(f.read())
			finally:
				os.remove(path)
		assert outputs[0] == outputs[1] and outputs[0]

if __name__ == "__main__":
	suite = unittest.TestSuite()
	suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestChecks))
	suite.addTests(unittest.TestLoader().loadTestsFromTestCase(TestAcceptance))
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
