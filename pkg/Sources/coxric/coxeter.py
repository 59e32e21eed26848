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
Coxeter matrices, the type-specification grammar, the bilinear form of the
geometric representation and the finiteness test.

    spec := atom ("x" atom)*
    atom := "A"k | "B"k | "D"k | "F4" | "H3" | "H4" | "I2(" m ")"

A spec may also be an inline JSON object {"m": [[...]]} or the path of a
JSON file holding one. In JSON, 0 stands for an infinite bond.
"""

from coxric          import settings
from coxric.errors   import SpecError, DegenerateTypeError
from coxric.families import Catalogue
import simplejson
import numpy
import math
import re
import os
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

INFINITY = math.inf
RE_ATOM  = re.compile(r"^([A-Z])(\d+)(?:\((\d+)\))?$")

# -----------------------------------------------------------------------------
#
#    CoxeterMatrix
#
# -----------------------------------------------------------------------------
class CoxeterMatrix(object):
	"""Immutable symmetric matrix of bond orders. Entries are ints, or
	`INFINITY` for an infinite bond."""

	def __init__(self, m, name=None):
		rows = []
		for row in m:
			rows.append(tuple(INFINITY if _ == INFINITY else int(_) for _ in row))
		self._m   = tuple(rows)
		self.n    = len(self._m)
		self.name = name
		self.validate()

	def validate(self):
		if self.n < 1:
			raise SpecError("rank < 1: empty Coxeter matrix")
		for i, row in enumerate(self._m):
			if len(row) != self.n:
				raise SpecError("Coxeter matrix must be square (row %d has %d entries, expected %d)" % (i, len(row), self.n))
			for j, value in enumerate(row):
				if value != self._m[j][i]:
					raise SpecError("Coxeter matrix must be symmetric: m[%d][%d]=%s, m[%d][%d]=%s" % (i, j, value, j, i, self._m[j][i]))
				if i == j and value != 1:
					raise SpecError("Coxeter matrix must have 1 on the diagonal (m[%d][%d]=%s)" % (i, i, value))
				if i != j and value < 2:
					raise SpecError("bond orders must be at least 2 (m[%d][%d]=%s)" % (i, j, value))

	@property
	def m(self):
		return self._m

	def __getitem__(self, index):
		return self._m[index]

	def has_infinite_bond(self):
		return any(_ == INFINITY for row in self._m for _ in row)

	def to_json_matrix(self):
		return [[0 if _ == INFINITY else _ for _ in row] for row in self._m]

	def __eq__(self, other):
		return isinstance(other, CoxeterMatrix) and self._m == other._m

	def __ne__(self, other):
		return not self.__eq__(other)

	def __hash__(self):
		return hash(self._m)

	def __repr__(self):
		return "CoxeterMatrix(%s%s)" % (self.name and self.name + ", " or "", self.to_json_matrix())

def block_diagonal(matrices, name=None):
	"""Disjoint product, left to right: off-block bonds are 2."""
	n     = sum(len(_) for _ in matrices)
	m     = [[2] * n for _ in range(n)]
	start = 0
	for block in matrices:
		for i, row in enumerate(block):
			for j, value in enumerate(row):
				m[start + i][start + j] = value
		start += len(block)
	for i in range(n):
		m[i][i] = 1
	return CoxeterMatrix(m, name=name)

# -----------------------------------------------------------------------------
#
#    Parsing and serialization
#
# -----------------------------------------------------------------------------
def parse_atom(atom):
	match = RE_ATOM.match(atom)
	if not match:
		raise SpecError("malformed atom '%s'" % (atom))
	letter, rank, parameter = match.group(1), int(match.group(2)), match.group(3)
	parameter = int(parameter) if parameter is not None else None
	fam = Catalogue.Get(letter)
	return fam.matrix(rank, parameter), fam.name(rank, parameter)

def parse_spec(text):
	"""Type specification, inline JSON matrix or JSON matrix file -> CoxeterMatrix."""
	if not isinstance(text, str) or not text.strip():
		raise SpecError("empty type specification")
	text = text.strip()
	if text.startswith("{"):
		return matrix_from_json(text)
	if text.lower().endswith(".json"):
		return load_matrix(text)
	atoms = text.split("x")
	if any(not _ for _ in atoms):
		raise SpecError("malformed product '%s'" % (text))
	blocks, names = [], []
	for atom in atoms:
		block, name = parse_atom(atom)
		blocks.append(block)
		names.append(name)
	return block_diagonal(blocks, name="x".join(names))

def matrix_from_json(text, name=None):
	try:
		data = simplejson.loads(text)
	except ValueError as e:
		raise SpecError("matrix JSON cannot be decoded: %s" % (e))
	if not isinstance(data, dict) or "m" not in data:
		raise SpecError('matrix JSON must be an object {"m": [[...], ...]}')
	rows = data["m"]
	if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
		raise SpecError("matrix JSON: 'm' must be a list of rows")
	m = []
	for row in rows:
		for value in row:
			if not isinstance(value, int) or isinstance(value, bool) or value < 0:
				raise SpecError("matrix JSON: entries must be non-negative integers, got %r" % (value,))
		m.append([INFINITY if _ == 0 else _ for _ in row])
	return CoxeterMatrix(m, name=name or data.get("name"))

def load_matrix(path):
	if not os.path.exists(path):
		raise SpecError("matrix file not found: %s" % (path))
	with open(path) as f:
		return matrix_from_json(f.read(), name=os.path.basename(path))

def serialize(cm):
	"""JSON text accepted back by `parse_spec`."""
	data = {"m": cm.to_json_matrix()}
	return simplejson.dumps(data, sort_keys=True)

# -----------------------------------------------------------------------------
#
#    Geometric representation
#
# -----------------------------------------------------------------------------
def bilinear_form(cm):
	"""B[i][j] = -cos(pi/m[i][j]); an infinite bond gives the limit -1.
	Returned read-only."""
	n = cm.n
	B = numpy.empty((n, n))
	for i in range(n):
		for j in range(n):
			value = cm[i][j]
			if i == j:
				B[i, j] = 1.0
			elif value == INFINITY:
				B[i, j] = -1.0
			elif value == 2:
				B[i, j] = 0.0
			else:
				B[i, j] = -math.cos(math.pi / value)
	B.flags.writeable = False
	return B

def is_finite_type(cm):
	"""True iff the form is positive definite. Any infinite bond gives False;
	a form singular within FINITE_TYPE_TOL raises DegenerateTypeError."""
	if cm.has_infinite_bond():
		return False
	smallest = numpy.linalg.eigvalsh(bilinear_form(cm))[0]
	tol      = settings.FINITE_TYPE_TOL
	if smallest > tol:
		return True
	if smallest >= -tol:
		raise DegenerateTypeError(smallest)
	return False

def coxeter_graph_edges(cm):
	"""Edges (i, j, label) of the Coxeter graph: pairs with m >= 3, labelled
	with m when m >= 4 (None otherwise)."""
	edges = []
	for i in range(cm.n):
		for j in range(i + 1, cm.n):
			value = cm[i][j]
			if value >= 3:
				edges.append((i, j, value if value >= 4 else None))
	return edges

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import itertools

class TestCoxeter(unittest.TestCase):

	def test_parse_spec(self):
		assert parse_spec("A2").m    == ((1, 3), (3, 1))
		assert parse_spec("A1xA1").m == ((1, 2), (2, 1))
		assert parse_spec("I2(7)").m == ((1, 7), (7, 1))
		a1a2 = parse_spec("A1xA2")
		assert a1a2.m == ((1, 2, 2), (2, 1, 3), (2, 3, 1)), a1a2
		assert a1a2.name == "A1xA2"

	def test_parse_errors(self):
		for bad in ("Q3", "A0", "I2(1)", "A2x", "xA2", "A2xxA1", "F5", "D1", "a2", "", "I2", "A2(3)"):
			self.assertRaises(SpecError, parse_spec, bad)

	def test_serialize_roundtrip(self):
		for cm in (parse_spec("B3"), parse_spec("A1xH3"), CoxeterMatrix([[1, INFINITY], [INFINITY, 1]])):
			assert parse_spec(serialize(cm)) == cm
		assert serialize(CoxeterMatrix([[1, INFINITY], [INFINITY, 1]])) == '{"m": [[1, 0], [0, 1]]}'

	def test_invalid_matrices(self):
		self.assertRaises(SpecError, CoxeterMatrix, [[1, 3], [2, 1]])
		self.assertRaises(SpecError, CoxeterMatrix, [[2, 3], [3, 1]])
		self.assertRaises(SpecError, CoxeterMatrix, [[1, 1], [1, 1]])
		self.assertRaises(SpecError, parse_spec, '{"m": [[1, -3], [-3, 1]]}')
		self.assertRaises(SpecError, parse_spec, '{"rows": []}')

	def test_bilinear_form(self):
		numpy.testing.assert_allclose(bilinear_form(parse_spec("A2")), [[1, -0.5], [-0.5, 1]], atol=1e-15)
		assert (bilinear_form(parse_spec("A1xA1")) == numpy.eye(2)).all()
		infinite = bilinear_form(CoxeterMatrix([[1, INFINITY], [INFINITY, 1]]))
		assert infinite[0, 1] == -1.0
		for spec in ("A3", "B4", "H4", "F4", "D4", "I2(9)"):
			B = bilinear_form(parse_spec(spec))
			assert (B == B.T).all()
			assert (numpy.diag(B) == 1.0).all()
			assert ((B <= 0) | numpy.eye(len(B), dtype=bool)).all()
			assert (B >= -1).all()
		assert (bilinear_form(parse_spec("H3")) == bilinear_form(parse_spec("H3"))).all()

	def test_is_finite_type(self):
		for spec in ("A1", "A2", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "A1xA2"):
			assert is_finite_type(parse_spec(spec)), spec
		for m in range(2, 13):
			assert is_finite_type(parse_spec("I2(%d)" % m))
		assert not is_finite_type(CoxeterMatrix([[1, INFINITY], [INFINITY, 1]]))
		assert not is_finite_type(CoxeterMatrix([[1, 3, INFINITY], [3, 1, 3], [INFINITY, 3, 1]]))

	def test_degenerate_and_hyperbolic(self):
		# affine A2: triangle of 3s
		self.assertRaises(DegenerateTypeError, is_finite_type, CoxeterMatrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]]))
		# hyperbolic triangle (2,3,7)
		assert not is_finite_type(CoxeterMatrix([[1, 3, 2], [3, 1, 7], [2, 7, 1]]))

	def test_matrix_file(self):
		import tempfile
		with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
			f.write('{"m": [[1, 5], [5, 1]]}')
		try:
			assert parse_spec(f.name) == parse_spec("I2(5)")
		finally:
			os.remove(f.name)
		self.assertRaises(SpecError, parse_spec, "/nonexistent/matrix.json")

	def test_coxeter_graph_edges(self):
		assert coxeter_graph_edges(parse_spec("B3")) == [(0, 1, None), (1, 2, 4)]
		assert coxeter_graph_edges(parse_spec("A1xA1")) == []

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestCoxeter)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
