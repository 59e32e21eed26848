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

class CoxricError(Exception):
	"""Base class of every error raised by coxric."""

# -----------------------------------------------------------------------------
#
#    Input errors (CLI exit code 2)
#
# -----------------------------------------------------------------------------
class SpecError(CoxricError, ValueError):
	"""Malformed type specification or Coxeter matrix."""

class DegenerateTypeError(CoxricError):
	"""The bilinear form is singular within tolerance: degenerate (affine) type."""

	def __init__(self, smallest_eigenvalue):
		self.smallest_eigenvalue = smallest_eigenvalue
		super(DegenerateTypeError, self).__init__(
			"degenerate (affine) type: smallest eigenvalue of the form is %.3e" % (smallest_eigenvalue))

class NotFiniteError(CoxricError):
	"""A finite Coxeter group was required."""

class GraphError(CoxricError, ValueError):
	"""Invalid vertex, isolated vertex, empty or malformed graph."""

class SizeGuardError(CoxricError):
	"""The input is larger than the configured desk-scale budget."""

	def __init__(self, what, size, limit, hint="use --force"):
		self.size  = size
		self.limit = limit
		if size is None:
			message = "%s: size exceeds the limit %d (%s)" % (what, limit, hint)
		else:
			message = "%s: size %d exceeds the limit %d (%s)" % (what, size, limit, hint)
		super(SizeGuardError, self).__init__(message)

class HypothesisError(CoxricError, ValueError):
	"""An operation was called outside its hypotheses, e.g. K = 0 in the
	isoperimetric bound."""

# -----------------------------------------------------------------------------
#
#    Computation errors
#
# -----------------------------------------------------------------------------
class RootClosureError(CoxricError):
	"""Root closure diverged, dedup ambiguity, or a root image was not found."""

class GroupClosureError(CoxricError):
	"""Element cap exceeded, or internal inconsistency of the group tables."""

class MissingValueError(CoxricError, KeyError):
	"""A function was evaluated where it has no value."""

	def __init__(self, vertex):
		self.vertex = vertex
		super(MissingValueError, self).__init__("missing function value at vertex %r" % (vertex,))

	def __str__(self):
		return self.args[0]

class NonZeroBaseError(CoxricError, ValueError):
	"""The closed-form evaluation requires f(x) = 0."""

class AsymmetricMatrixError(CoxricError, ValueError):
	"""Matrix asymmetry above SYMMETRY_TOL."""

class EigenConvergenceError(CoxricError):
	"""The eigensolver hit its sweep cap."""

# -----------------------------------------------------------------------------
#
#    Verification failures (CLI exit code 1)
#
# -----------------------------------------------------------------------------
class CheckFailure(CoxricError):
	"""A mathematical check failed; `payload` holds the counterexample."""

	def __init__(self, message, payload=None):
		self.payload = payload or {}
		super(CheckFailure, self).__init__(message)

INPUT_ERRORS = (SpecError, DegenerateTypeError, NotFiniteError, GraphError, SizeGuardError)

# EOF
