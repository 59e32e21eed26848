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

from coxric.errors import SpecError

# -----------------------------------------------------------------------------
#
# DECORATORS
#
# -----------------------------------------------------------------------------
def family(letter, description):
	"""A decorator that allows to declare a Coxeter family with its
	documentation."""
	def wrapper(_):
		return Catalogue.RegisterFamily(letter, description, _)
	return wrapper

# -----------------------------------------------------------------------------
#
# CATALOGUE
#
# -----------------------------------------------------------------------------
class Catalogue:
	"""The Catalogue is a singleton that acts as a registry for the Coxeter
	families of the type table, allowing to list them and to build their
	standard matrices."""

	FAMILIES = {}

	@classmethod
	def RegisterFamily( self, letter, description, familyClass ):
		if letter in self.FAMILIES: return familyClass
		familyClass.LETTER = letter
		self.FAMILIES[letter] = {
			"name"  : letter,
			"doc"   : description,
			"class" : familyClass
		}
		return familyClass

	@classmethod
	def Get( self, letter ):
		perform_families_import(get_available_families())
		try:
			return self.FAMILIES[letter]["class"]()
		except KeyError:
			raise SpecError("unknown atom '%s': no family registered under this letter" % (letter))

# -----------------------------------------------------------------------------
#
#    FAMILY BASE CLASS
#
# -----------------------------------------------------------------------------
class Family(object):
	"""A family knows the bonds (pairs with m >= 3) of its standard Coxeter
	matrix for a given rank. Non-adjacent pairs get 2."""

	LETTER     = None
	MIN_RANK   = 1
	RANKS      = None   # fixed ranks, for exceptional families
	PARAMETRIC = False

	def check(self, rank, parameter=None):
		if rank < 1:
			raise SpecError("rank < 1 in atom %s%d" % (self.LETTER, rank))
		if self.RANKS is not None and rank not in self.RANKS:
			raise SpecError("unknown atom %s%d: %s exists in rank %s only" % (
				self.LETTER, rank, self.LETTER, "/".join(map(str, self.RANKS))))
		if rank < self.MIN_RANK:
			raise SpecError("atom %s%d: rank must be at least %d" % (self.LETTER, rank, self.MIN_RANK))
		if parameter is not None and not self.PARAMETRIC:
			raise SpecError("atom %s%d takes no parameter" % (self.LETTER, rank))
		if self.PARAMETRIC and parameter is None:
			raise SpecError("atom %s%d needs a parameter, like %s%d(5)" % (self.LETTER, rank, self.LETTER, rank))

	def bonds(self, rank, parameter=None):
		raise NotImplementedError("need to be implemented")

	def matrix(self, rank, parameter=None):
		self.check(rank, parameter)
		m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
		for i, j, order in self.bonds(rank, parameter):
			m[i][j] = m[j][i] = order
		return m

	def name(self, rank, parameter=None):
		if parameter is not None:
			return "%s%d(%d)" % (self.LETTER, rank, parameter)
		return "%s%d" % (self.LETTER, rank)

# -----------------------------------------------------------------------------
#
# MODULE functions
#
# -----------------------------------------------------------------------------
import importlib, pkgutil, sys

def get_available_families():
	return ["coxric.families.%s" % _[1] for _ in pkgutil.walk_packages(sys.modules['coxric.families'].__path__)]

def perform_families_import(val):
	if type(val) not in (tuple, list):
		raise Exception("need to be a list, not a %s" % (type(val)))
	return tuple(importlib.import_module(item) for item in val)

def describe_families():
	perform_families_import(get_available_families())
	return [dict(letter=k, doc=v["doc"]) for k, v in sorted(Catalogue.FAMILIES.items())]

# EOF
