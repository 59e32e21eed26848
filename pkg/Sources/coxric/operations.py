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

from coxric               import settings, __version__
from coxric.coxeter       import parse_spec, serialize, coxeter_graph_edges
from coxric.roots         import generate_roots
from coxric.group         import generate_group, bruhat_graph
from coxric.graph         import load_graph
from coxric.models        import Report, PASS, FAIL, SKIP, verdict
from coxric.errors        import SpecError
from coxric.utils         import histogram, dumps
import coxric.gamma       as gamma
import coxric.spectral    as spectral
import coxric.isoperimetry as isoperimetry
import coxric.dihedral    as dihedral
import re
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

RE_WORD = re.compile(r"^(s\d+)+$")

# -----------------------------------------------------------------------------
#
#    Subject
#
# -----------------------------------------------------------------------------
class Subject(object):
	"""What an operation works on: a Coxeter type, with its root system, group
	and Bruhat graph, or a graph read from a file."""

	def __init__(self, spec=None, graph_path=None, force=False):
		if (spec is None) == (graph_path is None):
			raise SpecError("give either a type specification or --graph")
		self.spec       = spec
		self.graph_path = graph_path
		self.force      = force
		self.cm         = None
		self.rs         = None
		self.group      = None
		if spec is not None:
			self.cm    = parse_spec(spec)
			self.rs    = generate_roots(self.cm)
			self.group = generate_group(self.rs, cap=None if force else settings.GROUP_MAX_ORDER)
			self.graph = bruhat_graph(self.group)
		else:
			self.graph = load_graph(graph_path)
		info("subject", self.name, ":", self.graph.n, "vertices,", self.graph.edge_count(), "edges")

	@property
	def is_group(self):
		return self.group is not None

	@property
	def name(self):
		if self.is_group:
			return self.group.name
		return self.graph.name

	def require_group(self, command):
		if not self.is_group:
			raise SpecError("'%s' needs a Coxeter type, not a graph file" % (command))
		return self.group

	def resolve_vertex(self, text):
		"""Vertex id of `text`: "e", a word in the simple reflections like
		"s1s2s1" (any word, not only the stored reduced one), or a graph label."""
		if self.is_group and RE_WORD.match(text):
			u = self.group.identity
			for index in re.findall(r"\d+", text):
				index = int(index)
				if not 1 <= index <= self.rs.rank:
					raise SpecError("word %s uses s%d, rank is %d" % (text, index, self.rs.rank))
				u = self.group.mult(u, self.group.simple[index - 1])
			return u
		return self.graph.vertex_of(text)

	def describe(self):
		if self.is_group:
			return {"type": self.spec, "name": self.name, "matrix": self.cm.to_json_matrix()}
		return {"graph": self.graph_path, "name": self.name}

# -----------------------------------------------------------------------------
#
#    Operation
#
# -----------------------------------------------------------------------------
class Operation(object):
	"""A CLI workflow. `run()` computes, then leaves a Report behind
	(`get_report()`), whose `params` is the RunConfig."""

	NAME    = None
	COLUMNS = ("name", "value")

	def __init__(self, subject, seed=None, samples=None, workers=None, tolerances=None):
		self.subject    = subject
		self.seed       = settings.DEFAULT_SEED if seed is None else seed
		self.samples    = samples
		self.workers    = workers
		self.tolerances = tolerances or {}
		self.report     = None

	def set_report(self, results, passed=True, rows=None, columns=None, artifacts=None, **kwargs):
		self.report = Report(
			name      = self.NAME,
			operation = "%s.%s" % (self.__class__.__module__, self.__class__.__name__),
			params    = self.get_params(),
			meta      = kwargs,
			results   = results,
			passed    = passed,
			rows      = rows if rows is not None else _pairs(results),
			columns   = list(columns or self.COLUMNS),
			artifacts = artifacts or {},
		)

	def get_report(self):
		return self.report

	def get_params(self):
		"""used to represent the operation. Workers are left out: they never
		change a result."""
		return {
			"command"    : self.NAME,
			"input"      : self.subject.describe(),
			"seed"       : self.seed,
			"samples"    : self.samples,
			"force"      : self.subject.force,
			"tolerances" : dict(self.tolerances),
			"version"    : __version__,
		}

	def run(self):
		raise NotImplementedError("need to be implemented")

def _pairs(results):
	if not isinstance(results, dict):
		return []
	return [{"name": k, "value": v} for k, v in sorted(results.items()) if not isinstance(v, (dict, list, tuple))]

# -----------------------------------------------------------------------------
#
#    Group
#
# -----------------------------------------------------------------------------
class GroupOperation(Operation):

	NAME    = "group"
	COLUMNS = ("length", "elements")

	def run(self):
		grp     = self.subject.require_group(self.NAME)
		lengths = histogram(grp.length_of)
		results = {
			"type"          : grp.name,
			"rank"          : self.subject.rs.rank,
			"order"         : grp.order,
			"reflections"   : len(grp.reflections),
			"roots"         : len(self.subject.rs),
			"longest"       : int(grp.length_of[grp.longest_element()]),
			"lengths"       : lengths,
			"coxeter_graph" : [list(_) for _ in coxeter_graph_edges(self.subject.cm)],
		}
		rows    = [{"length": k, "elements": v} for k, v in lengths.items()]
		self.set_report(results, rows=rows)
		return self.report

# -----------------------------------------------------------------------------
#
#    Ricci curvature
#
# -----------------------------------------------------------------------------
class RicciOperation(Operation):
	"""Local curvature at `vertex`, at every vertex with `all_vertices`, and
	otherwise at every vertex of a graph file or, for a Coxeter type, at e
	with a seeded spot check (left translations act transitively)."""

	NAME    = "ricci"
	COLUMNS = ("vertex", "label", "ric")

	def __init__(self, subject, vertex=None, all_vertices=False, emit_minimizer=False, **kwargs):
		super(RicciOperation, self).__init__(subject, **kwargs)
		self.vertex         = vertex
		self.all_vertices   = all_vertices
		self.emit_minimizer = emit_minimizer

	def get_params(self):
		params = super(RicciOperation, self).get_params()
		params.update(vertex=self.vertex, all=self.all_vertices, emit_minimizer=self.emit_minimizer)
		return params

	def run(self):
		g = self.subject.graph
		if self.vertex is not None:
			summary = gamma.ricci_summary(g, vertices=[self.subject.resolve_vertex(self.vertex)],
				workers=self.workers, emit_minimizer=self.emit_minimizer)
		elif self.subject.is_group and not self.all_vertices:
			summary = gamma.ricci_summary(g, transitive=True, spot_check=settings.SPOT_CHECK_VERTICES,
				seed=self.seed, workers=self.workers, emit_minimizer=self.emit_minimizer)
		else:
			summary = gamma.ricci_summary(g, workers=self.workers, emit_minimizer=self.emit_minimizer)
		ric      = summary.global_ric
		triangle = gamma.check_triangle_bound(g, ric)
		results  = summary.to_dict()
		results["triangle_bound"] = triangle.to_dict()
		passed   = triangle.passed and (summary.spot_check is None or summary.spot_check["passed"])
		if self.subject.is_group:
			two     = abs(ric - 2.0) <= settings.RICCI_TOL
			results["bruhat_curvature"] = {"expected": 2.0, "ric": ric, "verdict": verdict(two)}
			passed  = passed and two
		rows     = [{"vertex": _.vertex, "label": _.label, "ric": _.ric} for _ in summary.reports]
		self.set_report(results, passed, rows=rows)
		return self.report

# -----------------------------------------------------------------------------
#
#    Spectral gap
#
# -----------------------------------------------------------------------------
def measured_ricci(subject, workers=None):
	"""Global curvature: at e for a Coxeter type, over all vertices otherwise."""
	if subject.is_group:
		return gamma.local_ricci(subject.graph, 0).ric
	return gamma.global_ricci(subject.graph, workers=workers)

class SpectralOperation(Operation):

	NAME = "spectral"

	def run(self):
		g       = self.subject.graph
		report  = spectral.spectral_gap(g, self.subject.force)
		ric     = measured_ricci(self.subject, self.workers)
		versus  = spectral.check_gap_vs_ricci(report, ric)
		results = report.to_dict()
		results["gap_vs_ricci"] = versus.to_dict()
		passed  = versus.passed
		if self.subject.is_group:
			lower   = report.gap is not None and report.gap >= 2.0 - settings.GAP_TOL
			results["gap_at_least_2"] = verdict(lower)
			passed  = passed and lower
		self.set_report(results, passed)
		return self.report

# -----------------------------------------------------------------------------
#
#    Isoperimetry
#
# -----------------------------------------------------------------------------
class IsoOperation(Operation):

	NAME    = "iso"
	COLUMNS = ("size", "boundary", "curvature_bound", "bruhat_bound", "slack", "verdict")

	def __init__(self, subject, exhaustive=False, **kwargs):
		super(IsoOperation, self).__init__(subject, **kwargs)
		self.mode = exhaustive and "exhaustive" or "sampled"

	def get_params(self):
		params = super(IsoOperation, self).get_params()
		params["mode"] = self.mode
		return params

	def run(self):
		g       = self.subject.graph
		lam     = spectral.spectral_gap(g, self.subject.force).gap
		K       = measured_ricci(self.subject, self.workers)
		summary = isoperimetry.verify_isoperimetry(g, self.mode, seed=self.seed, samples=self.samples,
			lam=lam, K=K, workers=self.workers, force=self.subject.force, bruhat=self.subject.is_group)
		results = summary.to_dict()
		rows    = [_.to_dict() for _ in summary.failures + summary.tightest()]
		self.set_report(results, summary.passed, rows=rows)
		return self.report

# -----------------------------------------------------------------------------
#
#    Dihedral classes
#
# -----------------------------------------------------------------------------
class ClassesOperation(Operation):

	NAME    = "classes"
	COLUMNS = ("representative", "label", "size", "order", "m", "reflections", "rotation_equality")

	def run(self):
		grp       = self.subject.require_group(self.NAME)
		structure = dihedral.verify_structure(grp)
		quads     = dihedral.verify_lemma_dyer(grp, seed=self.seed)
		results   = structure.to_dict()
		results["quadruples"] = quads
		rows      = [{
			"representative"    : c.representative,
			"label"             : grp.label(c.representative),
			"size"              : len(c.members),
			"order"             : c.subgroup.order,
			"m"                 : c.subgroup.m,
			"reflections"       : len(c.subgroup.reflections),
			"rotation_equality" : c.equality,
		} for c in structure.classes]
		self.set_report(results, structure.passed and quads["passed"], rows=rows)
		return self.report

# -----------------------------------------------------------------------------
#
#    Invariant suite
#
# -----------------------------------------------------------------------------
class CheckOperation(Operation):

	NAME    = "check"
	COLUMNS = ("name", "status")

	def run(self):
		from coxric.checks import run_checks
		self.subject.require_group(self.NAME)
		checks  = run_checks(self.subject, seed=self.seed, samples=self.samples, workers=self.workers)
		counts  = dict((s, len([_ for _ in checks if _.status == s])) for s in (PASS, FAIL, SKIP))
		results = {"checks": [_.to_dict() for _ in checks], "counts": counts}
		rows    = [{"name": _.name, "status": _.status} for _ in checks]
		self.set_report(results, not counts[FAIL], rows=rows)
		return self.report

# -----------------------------------------------------------------------------
#
#    Export
#
# -----------------------------------------------------------------------------
class ExportOperation(Operation):
	"""Writes one artifact: the Coxeter matrix, the roots, the group or the
	Bruhat graph. `artifacts` maps each available format to its text."""

	NAME    = "export"
	WHAT    = ("matrix", "roots", "group", "graph")
	COLUMNS = ("u", "v")

	def __init__(self, subject, what="graph", **kwargs):
		super(ExportOperation, self).__init__(subject, **kwargs)
		if what not in self.WHAT:
			raise SpecError("unknown export %r, expected one of %s" % (what, ", ".join(self.WHAT)))
		self.what = what

	def get_params(self):
		params = super(ExportOperation, self).get_params()
		params["what"] = self.what
		return params

	def run(self):
		g = self.subject.graph
		if self.what == "graph":
			results   = g.to_dict()
			ranks     = self.subject.is_group and self.subject.group.length_of.tolist() or None
			artifacts = {"json": dumps(results), "edges": g.to_edge_list(), "dot": g.to_dot(ranks)}
			rows      = [{"u": g.labels[u], "v": g.labels[v]} for u, v in g.edges()]
		else:
			self.subject.require_group("export %s" % (self.what))
			rows      = []
			if self.what == "matrix":
				results   = {"m": self.subject.cm.to_json_matrix()}
				artifacts = {"json": serialize(self.subject.cm)}
			elif self.what == "roots":
				results   = self.subject.rs.to_dict()
				artifacts = {"json": dumps(results)}
			else:
				results   = self.subject.group.to_dict(with_edges=True)
				artifacts = {"json": dumps(results)}
		self.set_report(results, rows=rows, artifacts=artifacts)
		return self.report

OPERATIONS = dict((_.NAME, _) for _ in (GroupOperation, RicciOperation, SpectralOperation,
	IsoOperation, ClassesOperation, CheckOperation, ExportOperation))

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import os
import tempfile
from coxric.errors import SizeGuardError

class TestOperations(unittest.TestCase):

	def setUp(self):
		self.a2 = Subject("A2")
		fd, self.c5 = tempfile.mkstemp(suffix=".edges")
		with os.fdopen(fd, "w") as f:
			f.write("# five cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n")

	def tearDown(self):
		os.remove(self.c5)

	def test_subject(self):
		assert self.a2.is_group and self.a2.graph.n == 6
		assert self.a2.resolve_vertex("e") == 0
		s1s2 = self.a2.resolve_vertex("s1s2")
		assert self.a2.group.length_of[s1s2] == 2
		assert self.a2.resolve_vertex("s1s2s1") == self.a2.resolve_vertex("s2s1s2")
		self.assertRaises(SpecError, self.a2.resolve_vertex, "s3")
		self.assertRaises(SpecError, Subject)
		self.assertRaises(SpecError, Subject, "A2", self.c5)
		graph = Subject(graph_path=self.c5)
		assert not graph.is_group and graph.resolve_vertex("3") == 3
		self.assertRaises(SpecError, graph.require_group, "classes")
		self.assertRaises(SizeGuardError, Subject, "H4")

	def test_group(self):
		report = GroupOperation(Subject("A3")).run()
		assert report.results["order"] == 24 and report.results["reflections"] == 6
		assert report.results["lengths"] == {0: 1, 1: 3, 2: 5, 3: 6, 4: 5, 5: 3, 6: 1}
		assert GroupOperation(Subject("I2(5)")).run().results["order"] == 10
		product = GroupOperation(Subject("A1xA2")).run().results
		assert (product["order"], product["reflections"]) == (12, 4)

	def test_report_params(self):
		operation = GroupOperation(self.a2, seed=3, tolerances={"RICCI_TOL": 1e-6})
		report    = operation.run()
		assert report.operation == "coxric.operations.GroupOperation"
		assert report.params["seed"] == 3 and report.params["tolerances"] == {"RICCI_TOL": 1e-6}
		assert report.to_dict()["verdict"] == PASS
		assert [_["length"] for _ in report.rows] == [0, 1, 2, 3]

	def test_ricci(self):
		report = RicciOperation(Subject("B3")).run()
		assert report.passed and abs(report.results["global_ric"] - 2) < 1e-8
		assert report.results["spot_check"]["passed"]
		report = RicciOperation(Subject(graph_path=self.c5)).run()
		assert report.passed and abs(report.results["global_ric"]) < 1e-9
		assert len(report.rows) == 5 and "bruhat_curvature" not in report.results
		report = RicciOperation(self.a2, vertex="e", emit_minimizer=True).run()
		assert [_["vertex"] for _ in report.rows] == [0]
		assert "minimizer" in report.results["vertices"][0]

	def test_spectral(self):
		report = SpectralOperation(self.a2).run()
		assert report.passed and abs(report.results["spectral_gap"] - 3) < 1e-8
		assert report.results["gap_at_least_2"] == PASS

	def test_iso(self):
		report = IsoOperation(self.a2, exhaustive=True).run()
		assert report.passed and report.results["tested"] == 64
		report = IsoOperation(Subject("A3"), samples=500, seed=42).run()
		assert report.passed and report.results["tested"] == 500 + 23

	def test_classes(self):
		report = ClassesOperation(Subject("B3")).run()
		assert report.passed and report.results["quadruples"]["passed"]
		assert sum(_["size"] for _ in report.rows) == report.results["sphere2_size"]

	def test_export(self):
		cm = ExportOperation(Subject("B3"), what="matrix").run().artifacts["json"]
		assert parse_spec(cm) == Subject("B3").cm
		graph = ExportOperation(self.a2).run().artifacts
		assert graph["edges"].count("\n") == 9
		assert graph["dot"].startswith("graph") and "rank=same" in graph["dot"]
		self.assertRaises(SpecError, ExportOperation, self.a2, "nothing")
		self.assertRaises(SpecError, ExportOperation(Subject(graph_path=self.c5), what="roots").run)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestOperations)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
