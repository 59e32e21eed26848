# -----------------------------------------------------------------------------
# Project   : Reporter
# -----------------------------------------------------------------------------
# License   : BSD License
# -----------------------------------------------------------------------------
# Creation  : 21-Sep-2009
# Last mod  : 19-Oct-2026
# -----------------------------------------------------------------------------

import sys, time

__doc__ = """
The reporter module defines a simple interface to report messages that may
occur during program execution. Messages are composed of the following
properties:

 - 'message' which is the textual description of the event
 - 'component' which is the textual identifier for the component
 - 'code' which is the (optional) error code

Messages have six levels of severity, from DEBUG to FATAL.

The reporter module offers three ways of reporting:

 - 'StderrReporter' which logs all the messages to stderr (the default)
 - 'FileReporter' which logs all the messages to a file (which could be a
   named pipe if you want to process it somewhere else)
 - 'MemoryReporter' which keeps the messages in a list, mostly for tests

Reports written on stdout by coxric are data, so nothing in this module ever
writes to stdout.

The usual way to use it is, at the head of a module:

>    debug, trace, info, warning, error, fatal = reporter.bind(__name__)

and then

>    info("Generated", 24, "elements")

all of these functions will use the global 'reporter.REPORTER' instance, to
which you can 'register' more reporters:

>    reporter.REPORTER.register(reporter.StderrReporter(level=reporter.INFO))
"""

DEBUG    = 0
TRACE    = 1
INFO     = 2
WARNING  = 3
ERROR    = 4
FATAL    = 5

LEVELS   = {
	"DEBUG"   : DEBUG,
	"TRACE"   : TRACE,
	"INFO"    : INFO,
	"WARNING" : WARNING,
	"ERROR"   : ERROR,
	"FATAL"   : FATAL,
}

def level_from_name( name ):
	"""Accepts a level name ("warning") or a level number and returns the
	level number."""
	if isinstance(name, int):
		return name
	try:
		return LEVELS[str(name).upper()]
	except KeyError:
		raise ValueError("reporter: unknown level %r" % (name,))

# ------------------------------------------------------------------------------
#
# REPORTER
#
# ------------------------------------------------------------------------------

class Reporter:
	"""Base reporter: filters by level and forwards formatted messages to
	its delegates."""

	TEMPLATES = [
		">>> %s|%s|%s|%s",
		"--- %s|%s|%s|%s",
		" -  %s|%s|%s|%s",
		"WRN %s|%s|%s|%s",
		"ERR %s|%s|%s|%s",
		"!!! %s|%s|%s|%s"
	]

	def __init__( self, level=0 ):
		self.level     = level_from_name(level)
		self.delegates = []

	def register( self, *reporters ):
		for reporter in reporters:
			if reporter not in self.delegates:
				self.delegates.append(reporter)

	def unregister( self, *reporters ):
		for reporter in reporters:
			assert (reporter in self.delegates), "Reporter not registered as a delegate"
			self.delegates.remove(reporter)

	def timestamp( self ):
		return time.strftime("%Y-%m-%dT%H:%M:%S")

	def log( self, level, message, component, code=None ):
		if level >= self.level:
			self._send(level, self.TEMPLATES[level] % (self.timestamp(), code or "-", component, message))

	def debug( self, message, component, code=None ):
		self.log(DEBUG, message, component, code)

	def trace( self, message, component, code=None ):
		self.log(TRACE, message, component, code)

	def info( self, message, component, code=None ):
		self.log(INFO, message, component, code)

	def warning( self, message, component, code=None ):
		self.log(WARNING, message, component, code)

	def error( self, message, component, code=None ):
		self.log(ERROR, message, component, code)

	def fatal( self, message, component, code=None ):
		self.log(FATAL, message, component, code)

	def _send( self, level, message ):
		for delegate in self.delegates:
			delegate._send(level, message)

# ------------------------------------------------------------------------------
#
# FILE REPORTER
#
# ------------------------------------------------------------------------------

class FileReporter(Reporter):

	def __init__( self, path=None, fd=None, level=0 ):
		Reporter.__init__(self, level)
		if path:
			assert fd is None
			self.fd = open(path, 'a')
		else:
			assert fd is not None
			self.fd = fd

	def _send( self, level, message ):
		if self.level > level: return
		self.fd.write(message + "\n")
		self.fd.flush()

# ------------------------------------------------------------------------------
#
# CONSOLE REPORTER
#
# ------------------------------------------------------------------------------

class ConsoleReporter(FileReporter):

	COLORS = [
		"\033[0m\033[01;32m", # DEBUG
		"\033[0m\033[00;32m", # TRACE
		"",                   # INFO
		"\033[0m\033[00;35m", # WARNING
		"\033[0m\033[00;31m", # ERROR
		"\033[0m\033[01;31m", # FATAL
	]

	def __init__( self, fd=None, level=0, color=None ):
		if fd is None: fd = sys.stderr
		FileReporter.__init__(self, fd=fd, level=level)
		# colors only make sense on a terminal
		if color is None:
			color = hasattr(fd, "isatty") and fd.isatty()
		self.color = color

	def _send( self, level, message ):
		start = self.color and self.COLORS[max(0, min(level, FATAL))] or ""
		end   = start and "\033[0m" or ""
		FileReporter._send(self, level, start + message + end)

class StderrReporter(ConsoleReporter):

	def __init__( self, level=0, color=None ):
		ConsoleReporter.__init__(self, fd=sys.stderr, level=level, color=color)

# ------------------------------------------------------------------------------
#
# MEMORY REPORTER
#
# ------------------------------------------------------------------------------

class MemoryReporter(Reporter):
	"""Keeps `(level, message)` pairs in `self.messages`."""

	def __init__( self, level=0 ):
		Reporter.__init__(self, level)
		self.messages = []

	def _send( self, level, message ):
		if self.level > level: return
		self.messages.append((level, message))

	def find( self, level=None, contains=None ):
		return [m for l, m in self.messages
			if (level is None or l == level) and (contains is None or contains in m)]

	def clear( self ):
		del self.messages[:]

# ------------------------------------------------------------------------------
#
# MODULE GLOBALES AND FUNCTIONS
#
# ------------------------------------------------------------------------------

REPORTER = Reporter()

def register( *reporters ):
	"""Registers the reporter instance(s) in the `REPORTER` singleton."""
	return REPORTER.register(*reporters)

def unregister( *reporters ):
	"""Unregisters the reporter instance(s) from the `REPORTER` singleton."""
	return REPORTER.unregister(*reporters)

def debug( message, component, code=None ):
	return REPORTER.debug(message, component, code)

def trace( message, component, code=None ):
	return REPORTER.trace(message, component, code)

def info( message, component, code=None ):
	return REPORTER.info(message, component, code)

def warning( message, component, code=None ):
	return REPORTER.warning(message, component, code)

def error( message, component, code=None ):
	return REPORTER.error(message, component, code)

def fatal( message, component, code=None ):
	return REPORTER.fatal(message, component, code)

def bind( component ):
	"""Returns `(debug, trace, info, warning, error, fatal)` functions that take
	`(*message, code=None)` as parameters. This should be used in the
	following way, at the head of a module:

	>    debug, trace, info, warning, error, fatal = reporter.bind("mymodule")

	and then

	>    info("Hello, world!")
	"""
	if not isinstance(component, str):
		raise TypeError("reporter.bind: Unsupported type: %s" % (type(component)))
	def wrap(function):
		def _(*args, **kwargs):
			function(" ".join(map(str, args)), component, code=kwargs.get("code"))
		return _
	return (
		wrap(debug),
		wrap(trace),
		wrap(info),
		wrap(warning),
		wrap(error),
		wrap(fatal)
	)

# -----------------------------------------------------------------------------
#
# TESTS
#
# -----------------------------------------------------------------------------
import unittest

class TestReporter(unittest.TestCase):

	def setUp(self):
		self.memory = MemoryReporter()
		register(self.memory)

	def tearDown(self):
		unregister(self.memory)

	def test_bind_forwards_component(self):
		_, _, _, warn, _, _ = bind("coxric.test")
		warn("graph has", 2, "components")
		found = self.memory.find(WARNING, "graph has 2 components")
		assert len(found) == 1, self.memory.messages
		assert "coxric.test" in found[0]

	def test_level_filter(self):
		self.memory.level = ERROR
		info("quiet", "coxric.test")
		error("loud", "coxric.test")
		assert self.memory.find(contains="quiet") == []
		assert len(self.memory.find(ERROR)) == 1

	def test_level_from_name(self):
		assert level_from_name("warning") == WARNING
		assert level_from_name(4)         == ERROR
		self.assertRaises(ValueError, level_from_name, "loudest")

if __name__ == "__main__":
	suite = unittest.TestLoader().loadTestsFromTestCase(TestReporter)
	unittest.TextTestRunner(verbosity=2).run(suite)

# EOF - vim: ts=4 sw=4 noet
