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

from coxric import settings
import simplejson
import pandas
import numpy
import math

MASK64 = (1 << 64) - 1

# -----------------------------------------------------------------------------
#
#    Serialization
#
# -----------------------------------------------------------------------------
def round_float(value, digits=None):
	digits = digits or settings.FLOAT_DIGITS
	if math.isnan(value) or math.isinf(value):
		return value
	value = float("%.*g" % (digits, value))
	return value + 0.0 if value != 0 else 0.0

def to_serializable(obj, digits=None):
	"""Recursively turns numpy values, tuples, sets and report objects into
	plain JSON types, rounding every float."""
	if hasattr(obj, "to_dict"):
		return to_serializable(obj.to_dict(), digits)
	if isinstance(obj, dict):
		return dict((str(k), to_serializable(v, digits)) for k, v in obj.items())
	if isinstance(obj, (list, tuple)):
		return [to_serializable(_, digits) for _ in obj]
	if isinstance(obj, (set, frozenset)):
		return [to_serializable(_, digits) for _ in sorted(obj)]
	if isinstance(obj, numpy.ndarray):
		return to_serializable(obj.tolist(), digits)
	if isinstance(obj, (bool, numpy.bool_)):
		return bool(obj)
	if isinstance(obj, (int, numpy.integer)):
		return int(obj)
	if isinstance(obj, (float, numpy.floating)):
		return round_float(float(obj), digits)
	return obj

def dumps(obj, indent=2):
	"""Deterministic JSON: sorted keys, rounded floats."""
	return simplejson.dumps(to_serializable(obj), sort_keys=True, indent=indent)

def to_csv(rows, columns):
	"""`rows` is a list of dicts; only `columns` are emitted, in that order."""
	frame = pandas.DataFrame([to_serializable(dict((c, r.get(c)) for c in columns)) for r in rows], columns=columns)
	return frame.to_csv(index=False, float_format="%%.%dg" % (settings.FLOAT_DIGITS), lineterminator="\n")

def format_table(rows, columns):
	"""Plain text table used by the `table` output format."""
	cells  = [[str(to_serializable(r.get(c, ""))) for c in columns] for r in rows]
	widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
	lines  = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
	lines.append("  ".join("-" * w for w in widths))
	for row in cells:
		lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
	return "\n".join(lines)

def histogram(values):
	"""value -> count, keys sorted."""
	counts = {}
	for v in values:
		counts[int(v)] = counts.get(int(v), 0) + 1
	return dict(sorted(counts.items()))

# -----------------------------------------------------------------------------
#
#    Deterministic random numbers
#
# -----------------------------------------------------------------------------
class XorShift64Star(object):
	"""xorshift64* generator (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D),
	seeded through one splitmix64 step so that any integer seed, zero
	included, gives a non-zero state. Same seed, same stream, everywhere."""

	MULTIPLIER = 0x2545F4914F6CDD1D

	def __init__(self, seed=0):
		z = (int(seed) + 0x9E3779B97F4A7C15) & MASK64
		z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
		z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
		self.state = (z ^ (z >> 31)) or 0x9E3779B97F4A7C15

	def next_u64(self):
		x = self.state
		x ^= x >> 12
		x ^= (x << 25) & MASK64
		x ^= x >> 27
		self.state = x
		return (x * XorShift64Star.MULTIPLIER) & MASK64

	def random(self):
		""" float in [0, 1) with 53 random bits """
		return (self.next_u64() >> 11) * (1.0 / (1 << 53))

	def uniform(self, low, high):
		return low + (high - low) * self.random()

	def randbelow(self, n):
		assert n > 0
		limit = (1 << 64) - ((1 << 64) % n)
		while True:
			x = self.next_u64()
			if x < limit:
				return x % n

	def bits(self, count):
		"""A list of `count` fair bits, 64 per draw."""
		result = []
		while len(result) < count:
			word = self.next_u64()
			for i in range(min(64, count - len(result))):
				result.append((word >> i) & 1)
		return result

	def sample(self, population_size, k):
		"""k distinct indices of range(population_size), partial Fisher-Yates."""
		pool = list(range(population_size))
		for i in range(k):
			j = i + self.randbelow(population_size - i)
			pool[i], pool[j] = pool[j], pool[i]
		return sorted(pool[:k])

	def vector(self, size, low=-1.0, high=1.0):
		return numpy.array([self.uniform(low, high) for _ in range(size)])

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

class TestUtils(unittest.TestCase):

	def test_round_float(self):
		assert round_float(1.0 / 3)         == 0.333333333333
		assert round_float(2.00000000000004) == 2.0
		assert str(round_float(-0.0))       == "0.0"

	def test_dumps_is_deterministic(self):
		a = dumps({"b": numpy.float64(0.1) + 0.2, "a": (1, 2), "c": {3, 1}})
		b = dumps({"c": {1, 3}, "a": [1, 2], "b": 0.30000000000000004})
		assert a == b, (a, b)
		assert '"b": 0.3' in a

	def test_to_csv(self):
		text = to_csv([{"size": 1, "slack": 0.75}, {"size": 2, "slack": 1.0 / 3}], ["size", "slack"])
		assert text.splitlines() == ["size,slack", "1,0.75", "2,0.333333333333"], text

	def test_histogram(self):
		assert histogram([0, 1, 1, 2, 1]) == {0: 1, 1: 3, 2: 1}

	def test_xorshift_reproducible(self):
		a = XorShift64Star(42)
		b = XorShift64Star(42)
		assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]
		assert XorShift64Star(0).state != 0
		assert XorShift64Star(1).next_u64() != XorShift64Star(2).next_u64()

	def test_xorshift_ranges(self):
		rng = XorShift64Star(7)
		values = [rng.random() for _ in range(1000)]
		assert min(values) >= 0.0 and max(values) < 1.0
		assert 0.4 < sum(values) / len(values) < 0.6
		assert all(0 <= rng.randbelow(5) < 5 for _ in range(100))
		picked = rng.sample(10, 4)
		assert len(set(picked)) == 4 and all(0 <= p < 10 for p in picked)
		assert len(rng.bits(130)) == 130

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestUtils)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF
