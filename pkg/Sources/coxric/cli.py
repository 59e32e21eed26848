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
coxric command line. Reports go to stdout (or --out), messages to stderr.

Exit codes: 0 every verdict passes, 1 a check or a computation failed, 2 bad
input.
"""

from coxric            import settings, __version__
from coxric.operations import Subject, OPERATIONS, ExportOperation
from coxric.families   import describe_families
from coxric.errors     import INPUT_ERRORS, HypothesisError, SpecError, CoxricError
from coxric.models     import verdict
from coxric.utils      import dumps, to_csv, format_table
import argparse
import sys
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

FORMATS = ("table", "json", "csv", "dot", "edges")

def build_parser():
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("spec", nargs="?", default=None,
		help="type specification (A3, B4, I2(5), A1xA2, ...), inline JSON matrix or .json matrix file")
	common.add_argument("--graph", dest="graph", default=None,
		help="read a graph (edge list, or JSON when the name ends in .json) instead of a Coxeter type")
	common.add_argument("--format", dest="format", choices=FORMATS, default="table",
		help="output format (default: table)")
	common.add_argument("--json", dest="format", action="store_const", const="json",
		help="same as --format json")
	common.add_argument("-o", "--out", dest="out", default=None,
		help="write the report to this file instead of stdout")
	common.add_argument("--seed", dest="seed", type=int, default=None,
		help="seed of every random draw (default: %d)" % (settings.DEFAULT_SEED))
	common.add_argument("--samples", dest="samples", type=int, default=None,
		help="number of sampled subsets (default: %d)" % (settings.DEFAULT_SAMPLES))
	common.add_argument("--force", dest="force", action="store_true", default=False,
		help="lift the size guards")
	common.add_argument("--tol", dest="tol", action="append", default=[], metavar="NAME=VALUE",
		help="override a setting for this run, e.g. --tol RICCI_TOL=1e-6")
	common.add_argument("--workers", dest="workers", type=int, default=None,
		help="processes used for per-vertex curvature and sampling")
	common.add_argument("--log-level", dest="log_level", default=None,
		choices=("DEBUG", "TRACE", "INFO", "WARNING", "ERROR", "FATAL"), type=str.upper,
		help="stderr log level (default: %s)" % (settings.LOG_LEVEL))

	parser   = argparse.ArgumentParser(prog="coxric",
		description="Finite Coxeter groups, Bruhat graphs and their discrete Ricci curvature.")
	parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
	commands = parser.add_subparsers(dest="command", metavar="command")
	commands.required = True

	group    = commands.add_parser("group", parents=[common], help="order, reflections and lengths of a group")
	group.add_argument("--list-types", dest="list_types", action="store_true", default=False,
		help="list the known type families")
	ricci    = commands.add_parser("ricci", parents=[common], help="discrete Ricci curvature")
	ricci.add_argument("--vertex", dest="vertex", default=None, help="only this vertex: e, a word like s1s2, or a label")
	ricci.add_argument("--all", dest="all_vertices", action="store_true", default=False, help="every vertex")
	ricci.add_argument("--emit-minimizer", dest="emit_minimizer", action="store_true", default=False,
		help="include a minimizing function for each vertex")
	commands.add_parser("spectral", parents=[common], help="spectral gap of the Laplacian")
	iso      = commands.add_parser("iso", parents=[common], help="isoperimetric inequalities")
	iso.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=False,
		help="enumerate every subset instead of sampling")
	commands.add_parser("classes", parents=[common], help="dihedral classes of the distance-2 sphere")
	commands.add_parser("check", parents=[common], help="run the whole invariant suite")
	export   = commands.add_parser("export", parents=[common], help="write the matrix, roots, group or graph")
	export.add_argument("--what", dest="what", choices=ExportOperation.WHAT, default="graph",
		help="what to export (default: graph)")
	return parser

def parse_tolerances(parser, items):
	values = {}
	for item in items:
		name, sep, text = item.partition("=")
		name = name.strip().upper()
		if not sep or not name or not hasattr(settings, name):
			parser.error("--tol expects NAME=VALUE with a known setting name, got %r" % (item))
		current = getattr(settings, name)
		try:
			values[name] = type(current)(text) if isinstance(current, (int, float)) and not isinstance(current, bool) else text
		except ValueError:
			parser.error("--tol %s: cannot read %r as %s" % (name, text, type(current).__name__))
	return values

def make_operation(args, tolerances):
	subject = Subject(args.spec, args.graph, args.force)
	kwargs  = dict(seed=args.seed, samples=args.samples, workers=args.workers, tolerances=tolerances)
	if args.command == "ricci":
		kwargs.update(vertex=args.vertex, all_vertices=args.all_vertices, emit_minimizer=args.emit_minimizer)
	elif args.command == "iso":
		kwargs.update(exhaustive=args.exhaustive)
	elif args.command == "export":
		kwargs.update(what=args.what)
	return OPERATIONS[args.command](subject, **kwargs)

def render(report, fmt):
	if fmt in report.artifacts:
		return report.artifacts[fmt]
	if fmt == "json":
		return dumps(report.to_dict()) + "\n"
	if fmt == "csv":
		return to_csv(report.rows, report.columns)
	if fmt == "table":
		title = "%s %s: %s" % (report.name, report.params["input"].get("name") or "", verdict(report.passed))
		return title + "\n\n" + format_table(report.rows, report.columns) + "\n"
	raise SpecError("format '%s' is not available for '%s'" % (fmt, report.name))

def list_types(fmt):
	families = describe_families()
	if fmt == "json":
		return dumps(families) + "\n"
	if fmt == "csv":
		return to_csv(families, ["letter", "doc"])
	return format_table(families, ["letter", "doc"]) + "\n"

def write(text, path=None):
	if path:
		with open(path, "w") as f:
			f.write(text)
	else:
		sys.stdout.write(text)
		sys.stdout.flush()

def main(argv=None):
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return e.code or 0
	try:
		tolerances = parse_tolerances(parser, args.tol)
	except SystemExit as e:
		return e.code
	previous   = settings.update(tolerances)
	consoles   = [_ for _ in reporter.REPORTER.delegates if isinstance(_, reporter.ConsoleReporter)]
	levels     = [_.level for _ in consoles]
	if args.log_level:
		for console in consoles:
			console.level = reporter.level_from_name(args.log_level)
	try:
		if args.command == "group" and args.list_types:
			write(list_types(args.format), args.out)
			return 0
		operation = make_operation(args, tolerances)
		report    = operation.run()
		write(render(report, args.format), args.out)
	except INPUT_ERRORS + (HypothesisError,) as e:
		error(e)
		return 2
	except CoxricError as e:
		# closure, eigensolver and check failures: no verdict could pass
		error(e.__class__.__name__ + ":", e)
		return 1
	finally:
		settings.update(previous)
		for console, level in zip(consoles, levels):
			console.level = level
	if not report.passed:
		warning(report.name, "verdict:", verdict(report.passed))
		return 1
	return 0

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import tempfile
import simplejson
import os

class TestCli(unittest.TestCase):

	def setUp(self):
		fd, self.out = tempfile.mkstemp()
		os.close(fd)
		fd, self.c5 = tempfile.mkstemp(suffix=".edges")
		with os.fdopen(fd, "w") as f:
			f.write("0 1\n1 2\n2 3\n3 4\n4 0\n")
		self.memory = reporter.MemoryReporter()
		reporter.register(self.memory)

	def tearDown(self):
		reporter.unregister(self.memory)
		os.remove(self.out)
		os.remove(self.c5)

	def run_json(self, *argv):
		code = main(list(argv) + ["--json", "--out", self.out])
		with open(self.out) as f:
			text = f.read()
		return code, text and simplejson.loads(text)

	def test_group(self):
		code, data = self.run_json("group", "A3")
		assert code == 0 and data["verdict"] == "PASS"
		assert data["results"]["order"] == 24 and data["results"]["reflections"] == 6
		assert data["config"]["command"] == "group" and data["config"]["input"]["type"] == "A3"
		code, data = self.run_json("group", "I2(5)")
		assert data["results"]["order"] == 10 and data["results"]["reflections"] == 5

	def test_list_types(self):
		code, data = self.run_json("group", "--list-types")
		assert code == 0 and set("ABDFHI") <= set(_["letter"] for _ in data)

	def test_ricci_on_a_graph(self):
		code, data = self.run_json("ricci", "--graph", self.c5)
		assert code == 0 and abs(data["results"]["global_ric"]) < 1e-9
		code, data = self.run_json("ricci", "F4", "--vertex", "e")
		assert code == 0 and abs(data["results"]["global_ric"] - 2) < 1e-8

	def test_spectral(self):
		code, data = self.run_json("spectral", "A2")
		assert code == 0 and abs(data["results"]["spectral_gap"] - 3) < 1e-8

	def test_input_errors(self):
		assert main(["group", "Q3", "--out", self.out]) == 2
		assert self.memory.find(reporter.ERROR, "unknown atom")
		assert main(["group", "--out", self.out]) == 2
		assert main(["spectral", "H4", "--out", self.out]) == 2
		assert main(["classes", "--graph", self.c5, "--out", self.out]) == 2
		assert main(["ricci", "A2", "--format", "dot", "--out", self.out]) == 2
		assert main(["ricci", "A2", "--tol", "NOT_A_SETTING=1"]) == 2
		assert main(["ricci", "A2", "--tol", "RICCI_TOL=abc"]) == 2

	def test_failed_verdict(self):
		before = settings.RICCI_TOL
		assert main(["ricci", "A2", "--tol", "RICCI_TOL=-1", "--out", self.out]) == 1
		assert settings.RICCI_TOL == before
		with open(self.out) as f:
			assert f.read().startswith("ricci A2: FAIL")

	def test_computation_error(self):
		before = settings.ROOT_CAP
		assert main(["group", "A3", "--tol", "ROOT_CAP=4", "--out", self.out]) == 1
		assert self.memory.find(reporter.ERROR, "RootClosureError")
		assert settings.ROOT_CAP == before

	def test_csv_and_export(self):
		assert main(["iso", "A2", "--exhaustive", "--format", "csv", "--out", self.out]) == 0
		with open(self.out) as f:
			assert f.readline().strip() == "size,boundary,curvature_bound,bruhat_bound,slack,verdict"
		assert main(["export", "A2", "--format", "dot", "--out", self.out]) == 0
		with open(self.out) as f:
			assert f.read().count(" -- ") == 9
		assert main(["export", "A2", "--what", "matrix", "--json", "--out", self.out]) == 0
		with open(self.out) as f:
			assert simplejson.loads(f.read()) == {"m": [[1, 3], [3, 1]]}

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestCli)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
