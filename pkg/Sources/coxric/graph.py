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
Undirected simple graphs with sorted adjacency, and the metric queries the
curvature calculus reads: spheres B(i, x), degrees, triangle counts and the
subgraph of the paths of length 1 and 2 leaving a vertex.

Graphs come from Bruhat graphs, edge-list files, JSON or networkx.
"""

from coxric.errors import GraphError
import simplejson
import networkx
import numpy
import os
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

# -----------------------------------------------------------------------------
#
#    Graph
#
# -----------------------------------------------------------------------------
class Graph(object):
	"""Vertices are 0..n-1. `labels[i]` is the display name of vertex i."""

	def __init__(self, n, edges=(), labels=None, name=None):
		if n < 0:
			raise GraphError("negative vertex count")
		self.n      = n
		self.name   = name
		self.labels = list(labels) if labels is not None else [str(_) for _ in range(n)]
		if len(self.labels) != n:
			raise GraphError("%d labels for %d vertices" % (len(self.labels), n))
		neighbors = [set() for _ in range(n)]
		for u, v in edges:
			u, v = int(u), int(v)
			if not (0 <= u < n and 0 <= v < n):
				raise GraphError("edge (%d, %d) has a vertex outside 0..%d" % (u, v, n - 1))
			if u == v:
				raise GraphError("loop at vertex %d" % (u))
			neighbors[u].add(v)
			neighbors[v].add(u)
		self.adj         = [tuple(sorted(_)) for _ in neighbors]
		self._neighbors  = [frozenset(_) for _ in neighbors]
		self._label_index = None

	def __len__(self):
		return self.n

	def __repr__(self):
		return "Graph(%s%d vertices, %d edges)" % (self.name and self.name + ", " or "", self.n, self.edge_count())

	def vertices(self):
		return range(self.n)

	def check_vertex(self, x):
		if not isinstance(x, (int, numpy.integer)) or not 0 <= x < self.n:
			raise GraphError("invalid vertex %r (graph has %d vertices)" % (x, self.n))
		return int(x)

	def require_degree(self, x):
		x = self.check_vertex(x)
		if not self.adj[x]:
			raise GraphError("vertex %s is isolated" % (self.labels[x]))
		return x

	def neighbors(self, x):
		return self.adj[x]

	def degree(self, x):
		return len(self.adj[x])

	def has_edge(self, u, v):
		return v in self._neighbors[u]

	def edges(self):
		for u in range(self.n):
			for v in self.adj[u]:
				if u < v:
					yield (u, v)

	def edge_array(self):
		"""(2, |E|) int array of edge endpoints, u < v."""
		edges = list(self.edges())
		if not edges:
			return numpy.zeros((2, 0), dtype=numpy.int64)
		return numpy.array(edges, dtype=numpy.int64).T

	def edge_count(self):
		return sum(len(_) for _ in self.adj) // 2

	def degrees(self):
		return numpy.array([len(_) for _ in self.adj], dtype=numpy.int64)

	def vertex_of(self, label):
		"""Vertex carrying `label` (a label string, or a vertex index)."""
		if self._label_index is None:
			self._label_index = dict((l, i) for i, l in enumerate(self.labels))
		if label in self._label_index:
			return self._label_index[label]
		if isinstance(label, (int, numpy.integer)) or (isinstance(label, str) and label.isdigit()):
			return self.check_vertex(int(label))
		raise GraphError("no vertex labelled %r" % (label,))

	def adjacency_matrix(self):
		A = numpy.zeros((self.n, self.n))
		for u, v in self.edges():
			A[u, v] = A[v, u] = 1.0
		return A

	def distances(self, x, limit=None):
		"""BFS distances from x, up to `limit`: dict vertex -> distance."""
		x        = self.check_vertex(x)
		distance = {x: 0}
		frontier = [x]
		depth    = 0
		while frontier and (limit is None or depth < limit):
			depth += 1
			layer  = []
			for u in frontier:
				for v in self.adj[u]:
					if v not in distance:
						distance[v] = depth
						layer.append(v)
			frontier = layer
		return distance

	def is_connected(self):
		return self.n == 0 or len(self.distances(0)) == self.n

	# -------------------------------------------------------------------------
	#    Interchange
	# -------------------------------------------------------------------------
	def to_dict(self):
		return {"n": self.n, "edges": [list(_) for _ in self.edges()], "labels": self.labels}

	def to_edge_list(self):
		return "".join("%s %s\n" % (self.labels[u], self.labels[v]) for u, v in self.edges())

	def to_dot(self, ranks=None):
		"""DOT text. `ranks[i]` groups vertices on the same rank (e.g. by length)."""
		lines = ["graph %s {" % (simplejson.dumps(self.name or "G"))]
		if ranks is not None:
			for rank in sorted(set(ranks)):
				members = " ".join("v%d;" % (i) for i in range(self.n) if ranks[i] == rank)
				lines.append("\t{ rank=same; %s }" % (members))
		for i in range(self.n):
			lines.append("\tv%d [label=%s];" % (i, simplejson.dumps(self.labels[i])))
		for u, v in self.edges():
			lines.append("\tv%d -- v%d;" % (u, v))
		lines.append("}")
		return "\n".join(lines) + "\n"

	def to_networkx(self):
		G = networkx.Graph()
		for i in range(self.n):
			G.add_node(i, label=self.labels[i])
		G.add_edges_from(self.edges())
		return G

# -----------------------------------------------------------------------------
#
#    Construction and loading
#
# -----------------------------------------------------------------------------
def _sort_tokens(tokens):
	if all(_.lstrip("-").isdigit() for _ in tokens):
		return sorted(tokens, key=int)
	return tokens

def from_edge_list(text, name=None):
	"""One "u v" pair per line; blank lines and `#` comments are ignored.
	Integer tokens are numbered in numeric order, other tokens in order of
	appearance."""
	pairs, seen = [], []
	known = set()
	for number, line in enumerate(text.splitlines(), 1):
		line = line.split("#", 1)[0].strip()
		if not line:
			continue
		fields = line.split()
		if len(fields) != 2:
			raise GraphError("edge list line %d: expected 'u v', got %r" % (number, line))
		for token in fields:
			if token not in known:
				known.add(token)
				seen.append(token)
		pairs.append(fields)
	if not pairs:
		raise GraphError("edge list is empty")
	labels = _sort_tokens(seen)
	index  = dict((t, i) for i, t in enumerate(labels))
	return Graph(len(labels), [(index[u], index[v]) for u, v in pairs], labels=labels, name=name)

def from_json(text, name=None):
	try:
		data = simplejson.loads(text)
	except ValueError as e:
		raise GraphError("graph JSON cannot be decoded: %s" % (e))
	if not isinstance(data, dict) or not isinstance(data.get("n"), int) or not isinstance(data.get("edges"), list):
		raise GraphError('graph JSON must be an object {"n": int, "edges": [[u, v], ...]}')
	for edge in data["edges"]:
		if not isinstance(edge, list) or len(edge) != 2 or not all(isinstance(_, int) for _ in edge):
			raise GraphError("graph JSON: malformed edge %r" % (edge,))
	return Graph(data["n"], data["edges"], labels=data.get("labels"), name=name or data.get("name"))

def from_networkx(G, name=None):
	nodes  = list(G.nodes())
	try:
		nodes = sorted(nodes)
	except TypeError:
		pass
	index  = dict((v, i) for i, v in enumerate(nodes))
	return Graph(len(nodes), [(index[u], index[v]) for u, v in G.edges()], labels=[str(_) for _ in nodes], name=name)

def load_graph(path):
	if not os.path.exists(path):
		raise GraphError("graph file not found: %s" % (path))
	with open(path) as f:
		text = f.read()
	name = os.path.basename(path)
	if path.lower().endswith(".json"):
		return from_json(text, name=name)
	return from_edge_list(text, name=name)

# -----------------------------------------------------------------------------
#
#    Metric and combinatorial queries
#
# -----------------------------------------------------------------------------
def ball(g, x, i):
	"""B(i, x): the vertices at distance exactly i from x."""
	if i < 0:
		raise GraphError("negative radius %d" % (i))
	return set(v for v, d in g.distances(x, limit=i).items() if d == i)

def degree(g, x):
	return g.degree(g.check_vertex(x))

def triangle_stats(g):
	"""({(u, v): triangles through the edge}, largest count). The largest
	count is 0 iff the graph is triangle-free."""
	counts = {}
	for u, v in g.edges():
		counts[(u, v)] = len(g._neighbors[u] & g._neighbors[v])
	return counts, max(counts.values()) if counts else 0

def two_ball_subgraph(g, x):
	"""Union of the paths of length 1 and 2 leaving x. Vertex 0 is x, then
	B(1, x) and B(2, x) in increasing order; labels are carried over."""
	x      = g.check_vertex(x)
	sphere = sorted(g.adj[x])
	ring   = set(sphere)
	outer  = sorted(set(w for v in sphere for w in g.adj[v]) - ring - {x})
	order  = [x] + sphere + outer
	index  = dict((v, i) for i, v in enumerate(order))
	edges  = [(0, index[v]) for v in sphere]
	for v in sphere:
		for w in g.adj[v]:
			if w in ring and v < w:
				edges.append((index[v], index[w]))
			elif w != x and w not in ring:
				edges.append((index[v], index[w]))
	return Graph(len(order), edges, labels=[g.labels[_] for _ in order], name="two-ball(%s)" % (g.labels[x]))

def two_ball_isomorphic(g, x, y):
	"""True iff the two-ball subgraphs at x and at y are isomorphic by a map
	sending x to y."""
	a = two_ball_subgraph(g, x).to_networkx()
	b = two_ball_subgraph(g, y).to_networkx()
	for G in (a, b):
		for node in G.nodes():
			G.nodes[node]["root"] = node == 0
	return networkx.is_isomorphic(a, b, node_match=lambda p, q: p["root"] == q["root"])

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

def cycle(n):
	return from_networkx(networkx.cycle_graph(n), name="C%d" % (n))

def complete(n):
	return from_networkx(networkx.complete_graph(n), name="K%d" % (n))

class TestGraph(unittest.TestCase):

	def test_construction(self):
		g = Graph(3, [(0, 1), (1, 0), (1, 2)])
		assert g.adj == [(1,), (0, 2), (1,)]
		assert g.edge_count() == 2
		self.assertRaises(GraphError, Graph, 2, [(0, 0)])
		self.assertRaises(GraphError, Graph, 2, [(0, 2)])
		self.assertRaises(GraphError, g.check_vertex, 3)
		self.assertRaises(GraphError, Graph(2, [(0, 1)]).check_vertex, "x")

	def test_ball(self):
		c4 = cycle(4)
		assert ball(c4, 0, 2) == {2}
		assert ball(c4, 0, 0) == {0}
		k33 = from_networkx(networkx.complete_bipartite_graph(3, 3))
		assert ball(k33, 0, 1) == {3, 4, 5}
		for x in c4.vertices():
			assert len(ball(c4, x, 1)) == degree(c4, x)

	def test_triangle_stats(self):
		assert triangle_stats(cycle(4))[1] == 0
		counts, T = triangle_stats(complete(4))
		assert T == 2 and set(counts.values()) == {2}
		assert triangle_stats(from_networkx(networkx.complete_bipartite_graph(3, 3)))[1] == 0

	def test_two_ball_subgraph(self):
		sub = two_ball_subgraph(cycle(6), 0)
		assert sub.n == 5 and sub.edge_count() == 4
		assert sub.labels[0] == "0"
		k2 = two_ball_subgraph(complete(2), 1)
		assert k2.n == 2 and k2.edge_count() == 1
		# edges inside B(2, x) are dropped
		c4 = two_ball_subgraph(cycle(4), 0)
		assert c4.edge_count() == 4
		sub = two_ball_subgraph(from_networkx(networkx.complete_bipartite_graph(2, 3)), 0)
		assert sub.edge_count() == 6

	def test_two_ball_isomorphic(self):
		cube = from_networkx(networkx.hypercube_graph(3))
		assert all(two_ball_isomorphic(cube, 0, y) for y in cube.vertices())
		path = from_networkx(networkx.path_graph(3))
		assert not two_ball_isomorphic(path, 0, 1)

	def test_edge_list(self):
		g = from_edge_list("# a square\n1 2\n2 3\n\n3 4\n4 1\n")
		assert g.labels == ["1", "2", "3", "4"]
		assert g.edge_count() == 4 and g.vertex_of("3") == 2
		again = from_edge_list(g.to_edge_list())
		assert list(again.edges()) == list(g.edges())
		self.assertRaises(GraphError, from_edge_list, "1 2 3\n")
		self.assertRaises(GraphError, from_edge_list, "# nothing\n")
		named = from_edge_list("b a\na c\n")
		assert named.labels == ["b", "a", "c"]

	def test_json_and_networkx(self):
		g = from_json('{"n": 3, "edges": [[0, 1], [1, 2]]}')
		assert g.edge_count() == 2
		assert networkx.is_isomorphic(g.to_networkx(), networkx.path_graph(3))
		self.assertRaises(GraphError, from_json, '{"n": 2, "edges": [[0]]}')
		self.assertRaises(GraphError, from_json, "[1, 2]")
		assert "v0 -- v1;" in g.to_dot(ranks=[0, 1, 2])

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestGraph)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
