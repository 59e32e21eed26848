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
Dense symmetric eigenproblems.

Small matrices (order <= JACOBI_MAX_ORDER, which covers every curvature
form) go through the cyclic Jacobi method below. Larger ones, i.e. the
Laplacians of big Bruhat graphs, go to LAPACK through numpy.linalg.eigh.
"""

from coxric        import settings
from coxric.errors import AsymmetricMatrixError, EigenConvergenceError
import numpy
import math
import reporter

debug, trace, info, warning, error, fatal = reporter.bind(__name__)

class SymMatrix(object):
	"""Read-only dense symmetric matrix. Asymmetry up to SYMMETRY_TOL is
	averaged away, more is an error."""

	def __init__(self, data):
		data = numpy.array(data, dtype=float)
		if data.ndim != 2 or data.shape[0] != data.shape[1] or not data.shape[0]:
			raise ValueError("a symmetric matrix must be square and non-empty, got shape %s" % (data.shape,))
		asymmetry = numpy.abs(data - data.T).max()
		if asymmetry > settings.SYMMETRY_TOL:
			raise AsymmetricMatrixError("matrix asymmetry %.3e exceeds %.1e" % (asymmetry, settings.SYMMETRY_TOL))
		if asymmetry:
			data = (data + data.T) / 2.0
		data.flags.writeable = False
		self.data = data

	@property
	def n(self):
		return self.data.shape[0]

	def __getitem__(self, index):
		return self.data[index]

	def trace(self):
		return float(numpy.trace(self.data))

	def quadratic(self, y):
		"""y^T M y"""
		return float(numpy.dot(y, numpy.dot(self.data, y)))

	def to_dict(self):
		return {"n": self.n, "entries": self.data}

# -----------------------------------------------------------------------------
#
#    Jacobi
#
# -----------------------------------------------------------------------------
def jacobi(data, tol=None, max_sweeps=None):
	"""Cyclic Jacobi rotations on a copy of `data`. Returns (eigenvalues,
	eigenvectors as columns), unsorted."""
	tol        = tol or settings.EIGEN_TOL
	max_sweeps = max_sweeps or settings.EIGEN_MAX_SWEEPS
	a          = numpy.array(data, dtype=float)
	n          = a.shape[0]
	v          = numpy.eye(n)
	for sweep in range(max_sweeps + 1):
		off = numpy.linalg.norm(a - numpy.diag(numpy.diag(a)))
		if off < tol * (1.0 + numpy.abs(numpy.diag(a)).max()):
			debug("jacobi converged after", sweep, "sweeps, order", n)
			return numpy.diag(a).copy(), v
		if sweep == max_sweeps:
			break
		for p in range(n - 1):
			for q in range(p + 1, n):
				apq = a[p, q]
				if apq == 0.0:
					continue
				theta = (a[q, q] - a[p, p]) / (2.0 * apq)
				if abs(theta) > 1e150:
					t = 1.0 / (2.0 * theta)
				else:
					t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
				c = 1.0 / math.sqrt(t * t + 1.0)
				s = t * c
				col_p, col_q = a[:, p].copy(), a[:, q].copy()
				a[:, p] = c * col_p - s * col_q
				a[:, q] = s * col_p + c * col_q
				row_p, row_q = a[p, :].copy(), a[q, :].copy()
				a[p, :] = c * row_p - s * row_q
				a[q, :] = s * row_p + c * row_q
				a[p, q] = a[q, p] = 0.0
				col_p, col_q = v[:, p].copy(), v[:, q].copy()
				v[:, p] = c * col_p - s * col_q
				v[:, q] = s * col_p + c * col_q
	raise EigenConvergenceError("jacobi did not converge in %d sweeps (order %d, off-diagonal norm %.3e)" % (max_sweeps, n, off))

def sym_eigen(m, tol=None, vectors=False, method="auto"):
	"""Eigenvalues of a SymMatrix in ascending order; with `vectors`, also the
	orthonormal eigenvectors as columns. `method` is "jacobi", "lapack" or
	"auto" (Jacobi up to JACOBI_MAX_ORDER)."""
	if not isinstance(m, SymMatrix):
		m = SymMatrix(m)
	if method not in ("auto", "jacobi", "lapack"):
		raise ValueError("unknown eigensolver %r" % (method,))
	if tol is not None and tol <= 0:
		raise ValueError("tolerance must be positive")
	if method == "jacobi" or (method == "auto" and m.n <= settings.JACOBI_MAX_ORDER):
		values, vecs = jacobi(m.data, tol)
		order        = numpy.argsort(values, kind="stable")
		values, vecs = values[order], vecs[:, order]
	elif vectors:
		values, vecs = numpy.linalg.eigh(m.data)
	else:
		values, vecs = numpy.linalg.eigvalsh(m.data), None
	if vectors:
		return values, vecs
	return values

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest
from coxric.utils import XorShift64Star

def cofactor_det(a):
	a = [list(row) for row in a]
	if len(a) == 1:
		return a[0][0]
	return sum((-1) ** j * a[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in a[1:]]) for j in range(len(a)))

def random_symmetric(rng, n):
	a = numpy.array([[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)])
	return (a + a.T) / 2.0

class TestLinalg(unittest.TestCase):

	def test_examples(self):
		numpy.testing.assert_allclose(sym_eigen(SymMatrix([[1, -1], [-1, 1]])), [0, 2], atol=1e-12)
		numpy.testing.assert_allclose(sym_eigen(SymMatrix(numpy.eye(3))), [1, 1, 1])
		numpy.testing.assert_allclose(sym_eigen(SymMatrix(numpy.diag([5.0, -2.0, 0.0]))), [-2, 0, 5])
		numpy.testing.assert_allclose(sym_eigen(SymMatrix([[7.0]])), [7.0])

	def test_symmetry(self):
		self.assertRaises(AsymmetricMatrixError, SymMatrix, [[1, 2], [2.001, 1]])
		m = SymMatrix([[1, 2], [2 + 1e-14, 1]])
		assert (m.data == m.data.T).all()
		self.assertRaises(ValueError, SymMatrix, [[1, 2, 3]])

	def test_reconstruction_trace_determinant(self):
		rng = XorShift64Star(3)
		for n in (2, 3, 4, 9, 30):
			a            = random_symmetric(rng, n)
			values, vecs = sym_eigen(SymMatrix(a), vectors=True)
			assert (numpy.diff(values) >= 0).all()
			numpy.testing.assert_allclose(vecs.dot(numpy.diag(values)).dot(vecs.T), a, atol=1e-7)
			numpy.testing.assert_allclose(vecs.T.dot(vecs), numpy.eye(n), atol=1e-9)
			assert abs(values.sum() - numpy.trace(a)) <= 1e-8 * max(1.0, abs(numpy.trace(a)))
			if n <= 4:
				assert abs(numpy.prod(values) - cofactor_det(a.tolist())) < 1e-9

	def test_jacobi_matches_lapack(self):
		rng = XorShift64Star(11)
		a   = random_symmetric(rng, 20)
		numpy.testing.assert_allclose(sym_eigen(a, method="jacobi"), sym_eigen(a, method="lapack"), atol=1e-9)

	def test_sweep_cap(self):
		rng = XorShift64Star(5)
		self.assertRaises(EigenConvergenceError, jacobi, random_symmetric(rng, 8), 1e-12, 1)

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestLinalg)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
