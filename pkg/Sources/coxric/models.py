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
Report objects. Each exposes `to_dict()`; floats are rounded when the
report is serialized (see `coxric.utils.dumps`), never here.
"""

from coxric import settings

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

def verdict(passed):
	return passed and PASS or FAIL

# -----------------------------------------------------------------------------
#
#    Curvature
#
# -----------------------------------------------------------------------------
class CurvatureReport(object):

	def __init__(self, vertex, ric, minimizer=None, label=None, meta=None):
		self.vertex    = vertex
		self.label     = label if label is not None else str(vertex)
		self.ric       = ric
		self.minimizer = minimizer
		self.meta      = meta or {}

	def to_dict(self, emit_minimizer=False):
		data = {"vertex": self.vertex, "label": self.label, "ric": self.ric, "meta": self.meta}
		if emit_minimizer and self.minimizer is not None:
			data["minimizer"] = self.minimizer.to_dict()
		return data

	def __repr__(self):
		return "CurvatureReport(%s, ric=%.12g)" % (self.label, self.ric)

class RicciSummary(object):

	def __init__(self, graph_name, reports, transitive=False, spot_check=None, emit_minimizer=False):
		self.graph_name     = graph_name
		self.reports        = reports
		self.transitive     = transitive
		self.spot_check     = spot_check
		self.emit_minimizer = emit_minimizer

	@property
	def global_ric(self):
		return min(_.ric for _ in self.reports)

	def to_dict(self):
		data = {
			"graph"      : self.graph_name,
			"global_ric" : self.global_ric,
			"transitive" : self.transitive,
			"vertices"   : [_.to_dict(self.emit_minimizer) for _ in self.reports],
		}
		if self.spot_check is not None:
			data["spot_check"] = self.spot_check
		return data

class TriangleVerdict(object):

	def __init__(self, t_max, ric, bound, passed):
		self.t_max  = t_max
		self.ric    = ric
		self.bound  = bound
		self.slack  = bound - ric
		self.passed = passed

	def to_dict(self):
		return {"T_max": self.t_max, "ric": self.ric, "bound": self.bound, "slack": self.slack, "verdict": verdict(self.passed)}

class EstimateReport(object):
	"""lhs >= rhs, up to ISO_SLACK_TOL."""

	def __init__(self, name, lhs, rhs):
		self.name   = name
		self.lhs    = lhs
		self.rhs    = rhs
		self.slack  = lhs - rhs
		self.passed = self.slack >= -settings.ISO_SLACK_TOL

	def to_dict(self):
		return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack, "verdict": verdict(self.passed)}

# -----------------------------------------------------------------------------
#
#    Spectral
#
# -----------------------------------------------------------------------------
class SpectralReport(object):

	def __init__(self, size, eigenvalues, gap, zero_multiplicity, threshold):
		self.size              = size
		self.eigenvalues       = eigenvalues
		self.gap               = gap
		self.zero_multiplicity = zero_multiplicity
		self.threshold         = threshold
		self.connected         = zero_multiplicity == 1

	@property
	def lambda_max(self):
		return float(self.eigenvalues[-1])

	def to_dict(self):
		data = {
			"size"              : self.size,
			"spectral_gap"      : self.gap,
			"zero_multiplicity" : self.zero_multiplicity,
			"connected"         : self.connected,
			"lambda_min"        : float(self.eigenvalues[0]),
			"lambda_max"        : self.lambda_max,
		}
		if self.size <= settings.SPECTRUM_ELIDE_ABOVE:
			data["spectrum"] = self.eigenvalues
		return data

class GapVerdict(object):

	def __init__(self, gap, ric, passed, note=None):
		self.gap    = gap
		self.ric    = ric
		self.passed = passed
		self.note   = note

	def to_dict(self):
		return {"spectral_gap": self.gap, "ric": self.ric, "verdict": verdict(self.passed), "note": self.note}

# -----------------------------------------------------------------------------
#
#    Isoperimetry
#
# -----------------------------------------------------------------------------
class IsoReport(object):

	def __init__(self, descriptor, size, boundary, curvature_bound, bruhat_bound, members=None):
		self.descriptor      = descriptor
		self.size            = size
		self.boundary        = boundary
		self.curvature_bound = curvature_bound
		self.bruhat_bound    = bruhat_bound
		self.members         = members
		bounds               = [_ for _ in (curvature_bound, bruhat_bound) if _ is not None]
		self.bound           = max(bounds)
		self.slack           = boundary - self.bound
		self.passed          = self.slack >= -settings.ISO_SLACK_TOL

	def sort_key(self):
		return (self.size, self.descriptor.get("pass", ""), self.descriptor.get("chunk", 0), self.descriptor.get("index", 0))

	def to_dict(self):
		data = {
			"subset"          : self.descriptor,
			"size"            : self.size,
			"boundary"        : self.boundary,
			"curvature_bound" : self.curvature_bound,
			"bruhat_bound"    : self.bruhat_bound,
			"slack"           : self.slack,
			"verdict"         : verdict(self.passed),
		}
		if self.members is not None and (not self.passed or len(self.members) <= 32):
			data["members"] = self.members
		return data

class IsoSummary(object):

	def __init__(self, mode, vertex_count, tested, reports, lam, ric, seed=None):
		self.mode         = mode
		self.vertex_count = vertex_count
		self.tested       = tested
		self.reports      = sorted(reports, key=IsoReport.sort_key)
		self.lam          = lam
		self.ric          = ric
		self.seed         = seed

	@property
	def failures(self):
		return [_ for _ in self.reports if not _.passed]

	@property
	def passed(self):
		return not self.failures

	@property
	def min_slack(self):
		return min(_.slack for _ in self.reports) if self.reports else None

	def tightest(self):
		"""Smallest slack per subset size."""
		best = {}
		for report in self.reports:
			if report.size not in best or report.slack < best[report.size].slack:
				best[report.size] = report
		return [best[_] for _ in sorted(best)]

	def to_dict(self, full=False):
		return {
			"mode"         : self.mode,
			"vertex_count" : self.vertex_count,
			"seed"         : self.seed,
			"tested"       : self.tested,
			"lambda"       : self.lam,
			"ric"          : self.ric,
			"min_slack"    : self.min_slack,
			"failures"     : [_.to_dict() for _ in self.failures],
			"tightest"     : [_.to_dict() for _ in (self.reports if full else self.tightest())],
			"verdict"      : verdict(self.passed),
		}

# -----------------------------------------------------------------------------
#
#    Structure and checks
#
# -----------------------------------------------------------------------------
class StructureReport(object):

	def __init__(self, group_name, sphere_size, classes, checks, flags):
		self.group_name  = group_name
		self.sphere_size = sphere_size
		self.classes     = classes
		self.checks      = checks
		self.flags       = flags

	@property
	def passed(self):
		return all(_["passed"] for _ in self.checks.values())

	def to_dict(self):
		return {
			"group"       : self.group_name,
			"sphere2_size": self.sphere_size,
			"classes"     : [_.to_dict() for _ in self.classes],
			"checks"      : dict((k, {"verdict": verdict(v["passed"]), "counterexamples": v["counterexamples"]}) for k, v in self.checks.items()),
			"flags"       : self.flags,
			"verdict"     : verdict(self.passed),
		}

class CheckResult(object):

	def __init__(self, name, status, detail=None):
		assert status in (PASS, FAIL, SKIP), "unknown status %s" % (status)
		self.name   = name
		self.status = status
		self.detail = detail or {}

	def to_dict(self):
		return {"name": self.name, "status": self.status, "detail": self.detail}

	def __repr__(self):
		return "CheckResult(%s: %s)" % (self.name, self.status)

# -----------------------------------------------------------------------------
#
#    REPORT
#
# -----------------------------------------------------------------------------
class Report(object):
	"""What an operation hands back to the CLI: provenance (`params`), the
	result payload, and the overall verdict."""

	def __init__(self, name=None, operation=None, params=None, meta=None, results=None, passed=True, *args, **kwargs):
		self.name      = name
		self.operation = operation
		self.params    = params or {}
		self.meta      = meta or {}
		self.results   = results
		self.passed    = passed
		for _k, _v in kwargs.items():
			if not hasattr(self, _k):
				setattr(self, _k, _v)

	def to_dict(self):
		return {
			"command" : self.name,
			"config"  : self.params,
			"meta"    : self.meta,
			"results" : self.results,
			"verdict" : verdict(self.passed),
		}

	def __repr__(self):
		return "Report %s (%s)" % (self.name, verdict(self.passed))

# EOF
