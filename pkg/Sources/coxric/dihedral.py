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
Dihedral reflection subgroups around the identity of a Bruhat graph.

For u at distance 2 from e, G_u is generated by the reflections s, t with
s.t = u. Two such elements are equivalent when their subgroups are equal
(as sets of elements, not up to isomorphism). Each G_u is dihedral and is
the largest dihedral subgroup containing any factorization of u, i.e. the
subgroup of the reflections whose roots lie in the plane of the two roots.

Dihedral here includes m = 2: two commuting reflections.
"""

from coxric        import settings
from coxric.group  import reflections, bruhat_graph
from coxric.graph  import ball
from coxric.models import StructureReport
from coxric.errors import HypothesisError
from coxric.utils  import XorShift64Star
import itertools
import numpy
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

MAX_COUNTEREXAMPLES = 5

class ReflectionSubgroup(object):

	def __init__(self, grp, elements):
		self.elements    = frozenset(elements)
		self.order       = len(self.elements)
		self.reflections = tuple(sorted(_ for _ in self.elements if grp.is_reflection(_)))
		self.rotations   = tuple(sorted(_ for _ in self.elements if grp.length_of[_] % 2 == 0))
		self.m           = None
		if self.order == 2 * len(self.reflections) and len(self.reflections) >= 2:
			m = len(self.reflections)
			if len(self.rotations) == m and any(grp.order_of(r) == m for r in self.rotations):
				self.m = m

	@property
	def is_dihedral(self):
		return self.m is not None

	def __eq__(self, other):
		return isinstance(other, ReflectionSubgroup) and self.elements == other.elements

	def __hash__(self):
		return hash(self.elements)

	def to_dict(self):
		return {"order": self.order, "m": self.m, "reflections": list(self.reflections), "dihedral": self.is_dihedral}

class SphereClass(object):

	def __init__(self, members, subgroup):
		self.members        = sorted(members)
		self.representative = self.members[0]
		self.subgroup       = subgroup
		self.equality       = None

	def to_dict(self):
		return {"representative": self.representative, "members": self.members, "size": len(self.members),
			"rotation_equality": self.equality, "subgroup": self.subgroup.to_dict()}

def closure(grp, generators):
	"""ReflectionSubgroup generated by `generators` (element ids)."""
	generators = sorted(set(generators))
	elements   = {0}
	frontier   = [0]
	while frontier:
		layer = []
		for w in frontier:
			for s in generators:
				p = grp.mult(w, s)
				if p not in elements:
					elements.add(p)
					layer.append(p)
		frontier = layer
	return ReflectionSubgroup(grp, elements)

# -----------------------------------------------------------------------------
#
#    Operations
#
# -----------------------------------------------------------------------------
def sphere2(grp):
	"""Elements at Bruhat distance exactly 2 from the identity."""
	return sorted(ball(bruhat_graph(grp), 0, 2))

def _factor_reflections(grp, u):
	"""Reflections s with s.t = u or t.s = u for some reflection t."""
	found = set()
	for t in reflections(grp):
		s = grp.mult(u, t)
		if grp.is_reflection(s):
			found.add(s)
		s = grp.mult(t, u)
		if grp.is_reflection(s):
			found.add(s)
	return found

def g_u(grp, u, sphere=None):
	sphere = sphere if sphere is not None else set(sphere2(grp))
	if u not in sphere:
		raise HypothesisError("element %s is not at distance 2 from the identity" % (grp.label(u)))
	return closure(grp, _factor_reflections(grp, u))

def classes(grp):
	"""Partition of the distance-2 sphere by equality of G_u, ordered by
	representative."""
	sphere = sphere2(grp)
	found  = set(sphere)
	groups = {}
	for u in sphere:
		subgroup = g_u(grp, u, found)
		groups.setdefault(subgroup, []).append(u)
	return sorted((SphereClass(members, subgroup) for subgroup, members in groups.items()), key=lambda _: _.representative)

def _gram_det(rs, indices):
	return float(numpy.linalg.det(rs.gram(indices)))

def maximal_dihedral(grp, t1, t2):
	"""Subgroup generated by the reflections of the positive roots lying in
	the plane of the roots of t1 and t2."""
	if t1 == t2:
		raise HypothesisError("maximal_dihedral needs two distinct reflections")
	rs     = grp.rs
	a1, a2 = grp.reflection_root(t1), grp.reflection_root(t2)
	if _gram_det(rs, (a1, a2)) <= settings.PLANE_TOL:
		raise HypothesisError("roots of %d and %d do not span a plane" % (t1, t2))
	plane = [t for k, t in enumerate(reflections(grp)) if abs(_gram_det(rs, (a1, a2, k))) < settings.PLANE_TOL]
	return closure(grp, plane)

# -----------------------------------------------------------------------------
#
#    Verification
#
# -----------------------------------------------------------------------------
class _Checks(dict):

	def add(self, name):
		self[name] = {"passed": True, "counterexamples": []}

	def fail(self, name, payload):
		check = self[name]
		check["passed"] = False
		if len(check["counterexamples"]) < MAX_COUNTEREXAMPLES:
			check["counterexamples"].append(payload)

def verify_structure(grp):
	"""Runs the structure checks over the whole distance-2 sphere. Never
	raises on a failed check: failures are in the report."""
	graph    = bruhat_graph(grp)
	sphere   = sphere2(grp)
	found    = classes(grp)
	ring_e   = set(graph.adj[0])
	class_of = {}
	for c in found:
		for u in c.members:
			class_of[u] = c
	checks   = _Checks()
	for name in ("dihedral", "maximality", "class_is_rotations", "pair_rigidity", "pairs_covered_once",
			"n_u_is_reflection_count", "neighbors_in_subgroup", "class_size_bound"):
		checks.add(name)
	flags    = []
	maximal  = {}
	for c in found:
		G = c.subgroup
		if not G.is_dihedral:
			checks.fail("dihedral", {"class": c.representative, "order": G.order, "reflections": len(G.reflections)})
		in_sphere = set(r for r in G.rotations if r != 0 and r in class_of)
		if set(c.members) != in_sphere:
			checks.fail("class_is_rotations", {"class": c.representative, "members": c.members, "rotations_in_sphere": sorted(in_sphere)})
		rotations = len(G.rotations) - 1
		if len(c.members) > rotations:
			checks.fail("class_size_bound", {"class": c.representative, "size": len(c.members), "rotations": rotations})
		c.equality = len(c.members) == rotations
		for u in c.members:
			near = ring_e & set(graph.adj[u])
			if len(near) != len(G.reflections):
				checks.fail("n_u_is_reflection_count", {"u": u, "n_u": len(near), "reflections": len(G.reflections)})
			if not near <= G.elements:
				checks.fail("neighbors_in_subgroup", {"u": u, "outside": sorted(near - G.elements)})
			for t1 in reflections(grp):
				t2 = grp.mult(t1, u)
				if not grp.is_reflection(t2):
					continue
				key = (min(t1, t2), max(t1, t2))
				if key not in maximal:
					maximal[key] = maximal_dihedral(grp, t1, t2)
				if maximal[key] != G:
					checks.fail("maximality", {"u": u, "t1": t1, "t2": t2, "order": maximal[key].order, "expected": G.order})
			if grp.order_of(u) == 2 and G.order > 4:
				flags.append({
					"u"          : u,
					"label"      : grp.label(u),
					"class_size" : len(c.members),
					"order"      : G.order,
					"note"       : "involution whose subgroup has order %d, not the order 4 of I2(2)" % (G.order),
				})
	for a, b in itertools.combinations(found, 2):
		common = set(a.subgroup.reflections) & set(b.subgroup.reflections)
		if len(common) >= 2:
			checks.fail("pair_rigidity", {"classes": [a.representative, b.representative], "common": sorted(common)})
	covered = {}
	for c in found:
		for pair in itertools.combinations(c.subgroup.reflections, 2):
			covered[pair] = covered.get(pair, 0) + 1
	for pair in itertools.combinations(sorted(reflections(grp)), 2):
		if covered.get(pair, 0) != 1:
			checks.fail("pairs_covered_once", {"pair": list(pair), "count": covered.get(pair, 0)})
	for flag in flags:
		warning("structure of", grp.name, ":", flag["label"], flag["note"])
	report = StructureReport(grp.name, len(sphere), found, checks, flags)
	if not report.passed:
		error("structure checks failed on", grp.name, ":", sorted(k for k, v in checks.items() if not v["passed"]))
	return report

def verify_lemma_dyer(grp, samples=None, seed=None):
	"""Checks that <t1, t2, t3, t4> is dihedral whenever t1.t2 = t3.t4 != e.
	All quadruples are tested when there are at most QUADRUPLE_EXHAUSTIVE_REFLECTIONS
	reflections, otherwise `samples` random ones."""
	T         = reflections(grp)
	by_value  = {}
	for t1, t2 in itertools.permutations(T, 2):
		by_value.setdefault(grp.mult(t1, t2), []).append((t1, t2))
	products  = sorted(by_value)
	cache     = {}
	failures  = []
	tested    = 0
	def check(a, b):
		generators = frozenset(a + b)
		if generators not in cache:
			cache[generators] = closure(grp, generators).is_dihedral
		if not cache[generators] and len(failures) < MAX_COUNTEREXAMPLES:
			failures.append({"quadruple": list(a + b)})
		return cache[generators]
	exhaustive = len(T) <= settings.QUADRUPLE_EXHAUSTIVE_REFLECTIONS and samples is None
	if exhaustive:
		for u in products:
			for a, b in itertools.product(by_value[u], repeat=2):
				check(a, b)
				tested += 1
	else:
		rng = XorShift64Star(settings.DEFAULT_SEED if seed is None else seed)
		# no two distinct reflections, nothing to draw from
		for _ in range((samples or settings.QUADRUPLE_SAMPLES) if products else 0):
			pairs = by_value[products[rng.randbelow(len(products))]]
			check(pairs[rng.randbelow(len(pairs))], pairs[rng.randbelow(len(pairs))])
			tested += 1
	passed = all(cache.values())
	return {"mode": exhaustive and "exhaustive" or "sampled", "tested": tested, "subgroups": len(cache), "failures": failures, "passed": passed}

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
from coxric.coxeter import parse_spec
from coxric.roots   import generate_roots
from coxric.group   import generate_group

def make_group(spec):
	return generate_group(generate_roots(parse_spec(spec)))

def orthogonal_short_pair(grp):
	"""Two reflections whose roots are orthogonal and span a plane holding
	four positive roots: the sign changes of two coordinates in B_n."""
	T = reflections(grp)
	for t1, t2 in itertools.combinations(T, 2):
		a1, a2 = grp.reflection_root(t1), grp.reflection_root(t2)
		if abs(grp.rs.gram([a1, a2])[0, 1]) < 1e-9 and len(maximal_dihedral(grp, t1, t2).reflections) == 4:
			return t1, t2
	return None

class TestDihedral(unittest.TestCase):

	def test_sphere2(self):
		assert len(sphere2(make_group("I2(3)"))) == 2
		assert len(sphere2(make_group("I2(2)"))) == 1
		assert sphere2(make_group("A1")) == []
		g = make_group("A3")
		for u in sphere2(g):
			assert not g.is_reflection(u) and u != 0 and g.length_of[u] % 2 == 0

	def test_g_u(self):
		g = make_group("I2(3)")
		u = sphere2(g)[0]
		G = g_u(g, u)
		assert G.order == 6 and len(G.reflections) == 3 and G.m == 3
		k = make_group("I2(2)")
		G = g_u(k, sphere2(k)[0])
		assert G.order == 4 and len(G.reflections) == 2 and G.m == 2
		self.assertRaises(HypothesisError, g_u, g, 0)

	def test_classes(self):
		assert [len(_.members) for _ in classes(make_group("I2(5)"))] == [4]
		assert [len(_.members) for _ in classes(make_group("A2"))] == [2]
		g     = make_group("A3")
		found = classes(g)
		members = [u for c in found for u in c.members]
		assert sorted(members) == sphere2(g)

	def test_maximal_dihedral(self):
		g = make_group("A2")
		assert maximal_dihedral(g, g.simple[0], g.simple[1]).order == 6
		a3 = make_group("A3")
		G  = maximal_dihedral(a3, a3.simple[0], a3.simple[2])
		assert G.order == 4 and len(G.reflections) == 2
		self.assertRaises(HypothesisError, maximal_dihedral, a3, a3.simple[0], a3.simple[0])

	def test_b4_example(self):
		g      = make_group("B4")
		t1, t2 = orthogonal_short_pair(g)
		u      = g.mult(t1, t2)
		G      = g_u(g, u)
		assert len(G.reflections) == 4 and G.order == 8 and G.m == 4
		assert G == maximal_dihedral(g, t1, t2)
		c = [_ for _ in classes(g) if u in _.members][0]
		assert len(c.members) == 3
		report = verify_structure(g)
		assert report.passed, report.to_dict()["checks"]
		assert any(f["u"] == u and f["order"] == 8 for f in report.flags)

	def test_verify_structure(self):
		for spec in ("A2", "A3", "B3", "H3", "I2(6)", "A1xA2"):
			report = verify_structure(make_group(spec))
			assert report.passed, (spec, report.to_dict()["checks"])

	def test_reflection_quadruples(self):
		result = verify_lemma_dyer(make_group("I2(4)"))
		assert result["passed"] and result["mode"] == "exhaustive"
		assert verify_lemma_dyer(make_group("A3"))["passed"]
		sampled = verify_lemma_dyer(make_group("B3"), samples=200, seed=3)
		assert sampled["passed"] and sampled["tested"] == 200 and sampled["mode"] == "sampled"
		single = verify_lemma_dyer(make_group("A1"), samples=50, seed=3)
		assert single["passed"] and single["tested"] == 0 and single["mode"] == "sampled"

	def test_trivial_quadruple(self):
		g = make_group("A3")
		t1, t2 = g.simple[0], g.simple[1]
		assert closure(g, [t1, t2, t1, t2]).is_dihedral

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestDihedral)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
