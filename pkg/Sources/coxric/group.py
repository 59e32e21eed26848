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
A finite Coxeter group materialized as permutations of the root indices.

Element ids are dense and follow BFS discovery order from the identity
(id 0) under right multiplication by the simple reflections, so the BFS
depth of an element is its length. Composition follows the action on
roots: (u.v).perm = u.perm[v.perm], i.e. v acts first.

An element is determined by the images of the simple roots, which is the
key of the lookup table.
"""

from coxric        import settings
from coxric.roots  import reflection_action
from coxric.graph  import Graph
from coxric.errors import GroupClosureError, SizeGuardError
import numpy
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

class GroupElement(object):

	def __init__(self, group, id):
		self.group = group
		self.id    = id

	@property
	def perm(self):
		return self.group.perms[self.id]

	@property
	def length(self):
		return int(self.group.length_of[self.id])

	def __mul__(self, other):
		return GroupElement(self.group, self.group.mult(self.id, other.id))

	def __eq__(self, other):
		return isinstance(other, GroupElement) and other.group is self.group and other.id == self.id

	def __hash__(self):
		return hash(self.id)

	def __repr__(self):
		return "GroupElement(%d, %s)" % (self.id, self.group.label(self.id))

# -----------------------------------------------------------------------------
#
#    Group
#
# -----------------------------------------------------------------------------
class Group(object):

	def __init__(self, rs, perms, parent, parent_generator, length_of):
		self.rs               = rs
		self.perms            = perms
		self.parent           = parent
		self.parent_generator = parent_generator
		self.length_of        = length_of
		for array in (self.perms, self.parent, self.parent_generator, self.length_of):
			array.flags.writeable = False
		self._index           = dict((self._key(p), i) for i, p in enumerate(perms))
		self.simple           = [self.lookup(reflection_action(rs, i).perm) for i in range(rs.rank)]
		self.reflections      = None
		self._root_of         = {}
		self._bruhat          = {}

	def _key(self, perm):
		return perm[:self.rs.rank].tobytes()

	def __len__(self):
		return len(self.perms)

	@property
	def order(self):
		return len(self.perms)

	@property
	def identity(self):
		return 0

	@property
	def name(self):
		return self.rs.cm.name

	def element(self, id):
		return GroupElement(self, id)

	def lookup(self, perm):
		"""Id of the element acting as `perm`; None when it is not in the group."""
		return self._index.get(self._key(numpy.asarray(perm, dtype=self.perms.dtype)))

	def mult(self, u, v):
		result = self._index.get(self._key(self.perms[u][self.perms[v][:self.rs.rank]]))
		if result is None:
			raise GroupClosureError("product of %d and %d is not in the group" % (u, v))
		return result

	def mult_many(self, u, ids):
		"""Ids of u.w for every w in `ids`."""
		images = self.perms[u][self.perms[ids][:, :self.rs.rank]]
		result = [self._index.get(_.tobytes()) for _ in images]
		if None in result:
			raise GroupClosureError("left translation by %d leaves the group" % (u))
		return numpy.array(result, dtype=numpy.int64)

	def inverse(self, u):
		return self.lookup(numpy.argsort(self.perms[u]))

	def order_of(self, u):
		power, count = u, 1
		while power != 0:
			power  = self.mult(power, u)
			count += 1
		return count

	def is_reflection(self, u):
		return u in self._root_of

	def reflection_root(self, t):
		"""Index of the positive root of the reflection t."""
		if t not in self._root_of:
			raise ValueError("element %d is not a reflection" % (t))
		return self._root_of[t]

	def word(self, u):
		"""Reduced word, as simple reflection indices, read from the BFS tree."""
		word = []
		while u != 0:
			word.append(int(self.parent_generator[u]))
			u = int(self.parent[u])
		return word[::-1]

	def label(self, u):
		word = self.word(u)
		return "".join("s%d" % (_ + 1) for _ in word) if word else "e"

	def id_of_label(self, label):
		if label == "e":
			return 0
		for u in range(len(self)):
			if self.label(u) == label:
				return u
		raise KeyError("no element with reduced word %r" % (label,))

	def longest_element(self):
		return int(numpy.argmax(self.length_of))

	def left_translation(self, g):
		"""Vertex permutation w -> g.w."""
		return self.mult_many(g, numpy.arange(len(self)))

	def to_dict(self, with_edges=False):
		data = {
			"type"        : self.name,
			"rank"        : self.rs.rank,
			"order"       : len(self),
			"simple"      : self.simple,
			"reflections" : self.reflections,
			"lengths"     : self.length_of,
			"labels"      : [self.label(_) for _ in range(len(self))],
		}
		if with_edges:
			data["edges"] = [list(_) for _ in bruhat_graph(self).edges()]
		return data

# -----------------------------------------------------------------------------
#
#    Operations
#
# -----------------------------------------------------------------------------
def generate_group(rs, cap=None):
	"""BFS closure from the identity under right multiplication by the simple
	reflections. `cap` bounds the order (ELEMENT_CAP by default); a cap
	below ELEMENT_CAP is a size guard and raises SizeGuardError."""
	limit    = cap or settings.ELEMENT_CAP
	simple   = [reflection_action(rs, i).perm for i in range(rs.rank)]
	identity = numpy.arange(len(rs), dtype=numpy.int32)
	perms    = [identity]
	parent   = [0]
	via      = [-1]
	lengths  = [0]
	index    = {identity[:rs.rank].tobytes(): 0}
	head     = 0
	while head < len(perms):
		current = perms[head]
		for i, s in enumerate(simple):
			image = current[s]
			key   = image[:rs.rank].tobytes()
			if key in index:
				continue
			if len(perms) >= limit:
				if limit < settings.ELEMENT_CAP:
					raise SizeGuardError("group %s" % (rs.cm.name or "matrix"), None, limit)
				raise GroupClosureError("group closure exceeded %d elements" % (limit))
			index[key] = len(perms)
			perms.append(image)
			parent.append(head)
			via.append(i)
			lengths.append(lengths[head] + 1)
		head += 1
	g = Group(rs, numpy.array(perms), numpy.array(parent), numpy.array(via), numpy.array(lengths))
	reflections(g)
	info("group", rs.cm.name or "matrix", "has order", len(g), "and", len(g.reflections), "reflections")
	return g

def reflections(g):
	"""Ids of the reflections, indexed like the positive roots. Also checks
	t.t = e and odd length for each."""
	if g.reflections is not None:
		return g.reflections
	found = []
	for k in range(g.rs.N):
		t = g.lookup(reflection_action(g.rs, k).perm)
		if t is None:
			raise GroupClosureError("reflection of positive root %d is not in the group" % (k))
		assert g.mult(t, t) == 0, "reflection %d is not an involution" % (t)
		assert g.length_of[t] % 2 == 1, "reflection %d has even length" % (t)
		found.append(t)
	if len(set(found)) != g.rs.N:
		raise GroupClosureError("%d distinct reflections for %d positive roots" % (len(set(found)), g.rs.N))
	g._root_of    = dict((t, k) for k, t in enumerate(found))
	g.reflections = found
	return found

def length(g, id):
	return int(g.length_of[id])

def bruhat_graph(g, side="left"):
	"""Graph on element ids with u ~ t.u for every reflection t (or u ~ u.t
	with side="right"). Vertex labels are reduced words."""
	if side not in ("left", "right"):
		raise ValueError("side must be 'left' or 'right', got %r" % (side,))
	if side in g._bruhat:
		return g._bruhat[side]
	ids    = numpy.arange(len(g))
	edges  = set()
	for t in reflections(g):
		if side == "left":
			images = g.mult_many(t, ids)
		else:
			images = numpy.array([g.mult(w, t) for w in ids], dtype=numpy.int64)
		for u, v in zip(ids.tolist(), images.tolist()):
			if u < v:
				edges.add((u, v))
	graph = Graph(len(g), sorted(edges), labels=[g.label(_) for _ in range(len(g))], name="B(%s)" % (g.name or "W"))
	g._bruhat[side] = graph
	return graph

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
import itertools
import networkx
from coxric.coxeter import parse_spec
from coxric.roots   import generate_roots
from coxric.graph   import triangle_stats

def make_group(spec):
	return generate_group(generate_roots(parse_spec(spec)))

class TestGroup(unittest.TestCase):

	def test_orders(self):
		expected = {"A1": 2, "A2": 6, "A3": 24, "B3": 48, "B4": 384, "D4": 192, "H3": 120, "A1xA2": 12, "I2(7)": 14}
		for spec, order in expected.items():
			g = make_group(spec)
			assert len(g) == order, (spec, len(g))
			assert len(reflections(g)) == g.rs.N

	def test_reflection_counts(self):
		assert len(reflections(make_group("A2"))) == 3
		assert len(reflections(make_group("B4"))) == 16
		for m in range(2, 9):
			assert len(reflections(make_group("I2(%d)" % m))) == m

	def test_lengths(self):
		g = make_group("A2")
		assert length(g, 0) == 0
		assert all(length(g, s) == 1 for s in g.simple)
		assert length(g, g.longest_element()) == 3
		b3 = make_group("B3")
		assert length(b3, b3.longest_element()) == b3.rs.N
		for u in range(len(b3)):
			assert len(b3.word(u)) == length(b3, u)

	def test_composition(self):
		g = make_group("H3")
		for u, v, w in ((3, 17, 44), (100, 5, 61), (7, 7, 119)):
			assert g.mult(g.mult(u, v), w) == g.mult(u, g.mult(v, w))
		for u in (0, 9, 57, 119):
			assert g.mult(u, g.inverse(u)) == 0
			assert g.mult(g.inverse(u), u) == 0
		s1, s2 = g.simple[0], g.simple[1]
		assert g.order_of(g.mult(s1, s2)) == 5
		assert g.order_of(g.mult(g.simple[1], g.simple[2])) == 3
		a = g.element(s1) * g.element(s2)
		assert a.id == g.mult(s1, s2) and a.length == 2

	def test_perm_commutes_with_negation(self):
		g = make_group("B3")
		for u in range(len(g)):
			assert (g.perms[u][g.rs.neg_of] == g.rs.neg_of[g.perms[u]]).all()

	def test_words_rebuild_elements(self):
		g = make_group("A3")
		for u in range(len(g)):
			w = 0
			for i in g.word(u):
				w = g.mult(w, g.simple[i])
			assert w == u
		assert g.id_of_label(g.label(17)) == 17

	def test_bruhat_small(self):
		assert list(bruhat_graph(make_group("A1")).edges()) == [(0, 1)]
		c4 = bruhat_graph(make_group("I2(2)")).to_networkx()
		assert networkx.is_isomorphic(c4, networkx.cycle_graph(4))
		k33 = bruhat_graph(make_group("A2")).to_networkx()
		assert networkx.is_isomorphic(k33, networkx.complete_bipartite_graph(3, 3))

	def test_bruhat_properties(self):
		for spec in ("A3", "B3", "H3", "I2(5)", "A1xA2"):
			g     = make_group(spec)
			graph = bruhat_graph(g)
			assert set(graph.degrees().tolist()) == {len(reflections(g))}
			assert graph.is_connected()
			assert triangle_stats(graph)[1] == 0
			for u, v in graph.edges():
				assert (g.length_of[u] - g.length_of[v]) % 2 == 1

	def test_left_translation_preserves_edges(self):
		g     = make_group("B3")
		graph = bruhat_graph(g)
		edges = set(graph.edges())
		for h in (1, 13, 47):
			moved = g.left_translation(h)
			assert sorted(moved.tolist()) == list(range(len(g)))
			for u, v in edges:
				a, b = sorted((int(moved[u]), int(moved[v])))
				assert (a, b) in edges

	def test_left_and_right_isomorphic(self):
		g = make_group("A3")
		assert networkx.is_isomorphic(bruhat_graph(g).to_networkx(), bruhat_graph(g, side="right").to_networkx())
		self.assertRaises(ValueError, bruhat_graph, g, "middle")

	def test_reflection_root(self):
		g = make_group("A2")
		for k, t in enumerate(reflections(g)):
			assert g.is_reflection(t) and g.reflection_root(t) == k
		self.assertRaises(ValueError, g.reflection_root, 0)

	def test_size_guard(self):
		rs = generate_roots(parse_spec("B4"))
		self.assertRaises(SizeGuardError, generate_group, rs, 100)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestGroup)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
