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
Root system of the geometric representation: closure of the simple roots
under the simple reflections, split into positive and negative roots, and
the permutation each reflection induces on the roots.

Roots are stored as coefficient vectors over the simple roots. Positive
roots take indices 0..N-1 (simple roots first), and the negative of root i
is stored at i + N.
"""

from coxric         import settings
from coxric.coxeter import bilinear_form, is_finite_type
from coxric.errors  import RootClosureError, NotFiniteError
import threading
import numpy
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

class Root(object):

	def __init__(self, coords, positive):
		self.coords   = coords
		self.positive = positive

	def __repr__(self):
		return "Root(%s%s)" % (self.positive and "+" or "-", numpy.round(self.coords, 6).tolist())

class RootPermutation(object):
	"""Permutation of root indices: perm[j] is the index of the image of
	root j."""

	def __init__(self, perm):
		self.perm = numpy.asarray(perm, dtype=numpy.int64)
		self.perm.flags.writeable = False

	def __getitem__(self, index):
		return int(self.perm[index])

	def __len__(self):
		return len(self.perm)

	def __eq__(self, other):
		return isinstance(other, RootPermutation) and numpy.array_equal(self.perm, other.perm)

	def __hash__(self):
		return hash(self.perm.tobytes())

	def then(self, other):
		"""Apply `other` first, then self (function composition self o other)."""
		return RootPermutation(self.perm[other.perm])

	def is_involution(self):
		return bool((self.perm[self.perm] == numpy.arange(len(self.perm))).all())

# -----------------------------------------------------------------------------
#
#    RootSystem
#
# -----------------------------------------------------------------------------
class RootSystem(object):

	def __init__(self, cm, form, coords):
		count = len(coords)
		assert count % 2 == 0, "odd number of roots"
		self.cm             = cm
		self.form           = form
		self.coords         = coords
		self.coords.flags.writeable = False
		self.N              = count // 2
		self.positive_index = list(range(self.N))
		self.neg_of         = numpy.concatenate([numpy.arange(self.N, count), numpy.arange(self.N)])
		self._actions       = {}
		self._lock          = threading.Lock()

	@property
	def rank(self):
		return self.cm.n

	def __len__(self):
		return len(self.coords)

	@property
	def roots(self):
		return [self.root(i) for i in range(len(self))]

	def root(self, index):
		return Root(self.coords[index], index < self.N)

	def is_positive(self, index):
		return index < self.N

	def inner(self, a, b):
		"""<a, b> for two coefficient vectors."""
		return float(numpy.dot(a, numpy.dot(self.form, b)))

	def gram(self, indices):
		vectors = self.coords[list(indices)]
		return numpy.dot(vectors, numpy.dot(self.form, vectors.T))

	def locate(self, vectors):
		"""Stored index of each vector; RootClosureError if one is not a root."""
		vectors = numpy.atleast_2d(vectors)
		result  = numpy.empty(len(vectors), dtype=numpy.int64)
		for start in range(0, len(vectors), 128):
			chunk    = vectors[start:start + 128]
			distance = numpy.abs(chunk[:, None, :] - self.coords[None, :, :]).max(axis=2)
			best     = distance.argmin(axis=1)
			worst    = distance[numpy.arange(len(chunk)), best].max()
			if worst >= settings.ROOT_MATCH_TOL:
				raise RootClosureError("image root not found within %g (distance %g)" % (settings.ROOT_MATCH_TOL, worst))
			result[start:start + len(chunk)] = best
		return result

	def reflect(self, root_index, vectors):
		alpha = self.coords[root_index]
		norm  = self.inner(alpha, alpha)
		dots  = numpy.dot(numpy.atleast_2d(vectors), numpy.dot(self.form, alpha))
		return vectors - (2.0 / norm) * dots[:, None] * alpha[None, :]

	def to_dict(self):
		return {
			"type"           : self.cm.name,
			"rank"           : self.rank,
			"form"           : self.form,
			"root_count"     : len(self),
			"positive_count" : self.N,
			"roots"          : [{"index": i, "coords": self.coords[i], "positive": i < self.N} for i in range(len(self))],
		}

def reflection_action(rs, root_index):
	"""RootPermutation induced by r_alpha, alpha = root `root_index`. Cached."""
	if not 0 <= root_index < len(rs):
		raise IndexError("root index %d out of range" % (root_index))
	action = rs._actions.get(root_index)
	if action is None:
		action = RootPermutation(rs.locate(rs.reflect(root_index, rs.coords)))
		with rs._lock:
			rs._actions.setdefault(root_index, action)
	return action

# -----------------------------------------------------------------------------
#
#    Closure
#
# -----------------------------------------------------------------------------
class _RootStore(object):
	""" growing array of roots with tolerance-based lookup """

	def __init__(self, rank):
		self.data  = numpy.empty((16, rank))
		self.count = 0

	def find(self, vector):
		if not self.count:
			return None
		distance = numpy.abs(self.data[:self.count] - vector).max(axis=1)
		best     = int(distance.argmin())
		if distance[best] < settings.ROOT_MATCH_TOL:
			return best
		if distance[best] < settings.ROOT_AMBIGUITY_TOL:
			raise RootClosureError("dedup ambiguity: candidate root within %g of root %d but beyond %g (numeric degradation)" % (
				settings.ROOT_AMBIGUITY_TOL, best, settings.ROOT_MATCH_TOL))
		return None

	def add(self, vector):
		if self.count >= settings.ROOT_CAP:
			raise RootClosureError("root closure diverged: more than %d roots" % (settings.ROOT_CAP))
		if self.count == len(self.data):
			self.data = numpy.concatenate([self.data, numpy.empty_like(self.data)])
		self.data[self.count] = vector
		self.count += 1
		return self.count - 1

def generate_roots(cm):
	"""Closure of the simple roots under the simple reflections."""
	if not is_finite_type(cm):
		raise NotFiniteError("%s is not of finite type" % (cm.name or cm.to_json_matrix()))
	form  = bilinear_form(cm)
	n     = cm.n
	store = _RootStore(n)
	queue = []
	for i in range(n):
		store.add(numpy.eye(n)[i])
		queue.append(i)
	while queue:
		current = store.data[queue.pop(0)].copy()
		dots    = numpy.dot(form, current)
		for i in range(n):
			image    = current.copy()
			image[i] -= 2.0 * dots[i]
			if store.find(image) is None:
				queue.append(store.add(image))
	found = store.data[:store.count]
	tol   = settings.POSITIVITY_TOL
	positives, negatives = [], []
	for index, vector in enumerate(found):
		if (vector >= -tol).all():
			positives.append(index)
		elif (vector <= tol).all():
			negatives.append(index)
		else:
			raise RootClosureError("root %s has coefficients of both signs" % (vector.tolist()))
	if len(positives) != len(negatives):
		raise RootClosureError("%d positive roots but %d negative roots" % (len(positives), len(negatives)))
	coords = numpy.concatenate([found[positives], -found[positives]])
	for index in negatives:
		distance = numpy.abs(coords[len(positives):] - found[index]).max(axis=1).min()
		assert distance < settings.ROOT_MATCH_TOL, "negative root without positive partner"
	rs    = RootSystem(cm, form, coords)
	norms = numpy.einsum("ij,jk,ik->i", coords, form, coords)
	if numpy.abs(norms - 1.0).max() > settings.ROOT_NORM_TOL:
		raise RootClosureError("roots are not unit vectors (max deviation %g)" % (numpy.abs(norms - 1.0).max()))
	info("root system of", cm.name or "matrix", ":", len(rs), "roots,", rs.N, "positive")
	return rs

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
from coxric.coxeter import parse_spec, CoxeterMatrix, INFINITY

class TestRoots(unittest.TestCase):

	def test_counts(self):
		expected = {"A1": 2, "A2": 6, "A3": 12, "B3": 18, "B4": 32, "D4": 24, "H3": 30, "F4": 48, "A1xA1": 4, "A1xA2": 8}
		for m in range(2, 9):
			expected["I2(%d)" % m] = 2 * m
		for spec, count in expected.items():
			rs = generate_roots(parse_spec(spec))
			assert len(rs) == count, (spec, len(rs))
			assert len(rs.positive_index) * 2 == len(rs)

	def test_layout(self):
		rs = generate_roots(parse_spec("B3"))
		# simple roots first, negatives mirrored
		numpy.testing.assert_array_equal(rs.coords[:3], numpy.eye(3))
		numpy.testing.assert_array_equal(rs.coords[rs.N:], -rs.coords[:rs.N])
		assert all(rs.neg_of[rs.neg_of[i]] == i for i in range(len(rs)))
		assert all(rs.root(i).positive == (i < rs.N) for i in range(len(rs)))

	def test_unit_norm(self):
		for spec in ("H3", "F4", "I2(7)"):
			rs = generate_roots(parse_spec(spec))
			for i in range(len(rs)):
				assert abs(rs.inner(rs.coords[i], rs.coords[i]) - 1.0) < 1e-8

	def test_not_finite(self):
		self.assertRaises(NotFiniteError, generate_roots, CoxeterMatrix([[1, INFINITY], [INFINITY, 1]]))

	def test_reflection_action_a1(self):
		rs = generate_roots(parse_spec("A1"))
		assert reflection_action(rs, 0).perm.tolist() == [1, 0]

	def test_reflection_action_a2(self):
		rs = generate_roots(parse_spec("A2"))
		target = rs.locate(numpy.array([1.0, 1.0]))[0]
		assert reflection_action(rs, 0)[1] == target
		assert rs.is_positive(target)

	def test_actions_are_signed_involutions(self):
		for spec in ("A3", "H3", "B4"):
			rs = generate_roots(parse_spec(spec))
			for k in range(len(rs)):
				action = reflection_action(rs, k)
				assert action.is_involution()
				assert sorted(action.perm.tolist()) == list(range(len(rs)))
				assert (action.perm[rs.neg_of] == rs.neg_of[action.perm]).all()

	def test_actions_preserve_form(self):
		rs   = generate_roots(parse_spec("F4"))
		gram = rs.gram(range(len(rs)))
		for k in (0, 5, 17, 30):
			p = reflection_action(rs, k).perm
			numpy.testing.assert_allclose(gram[numpy.ix_(p, p)], gram, atol=1e-8)

	def test_simple_reflection_sends_one_positive_root_negative(self):
		for spec in ("A3", "B3", "H3", "F4"):
			rs = generate_roots(parse_spec(spec))
			for i in range(rs.rank):
				p    = reflection_action(rs, i).perm
				sent = [j for j in range(rs.N) if not rs.is_positive(p[j])]
				assert sent == [i], (spec, i, sent)
				assert p[i] == rs.neg_of[i]

	def test_cache_returns_same_object(self):
		rs = generate_roots(parse_spec("A2"))
		assert reflection_action(rs, 2) is reflection_action(rs, 2)
		self.assertRaises(IndexError, reflection_action, rs, 6)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestRoots)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
