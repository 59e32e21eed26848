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

# Site settings: point $COXRIC_SETTINGS at this module (it must be importable,
# e.g. run from the repository root) to use them instead of the built-in
# coxric.defaults. Only the values read from the environment differ.

import os
from coxric.defaults import *

WORKERS   = int(os.getenv("COXRIC_WORKERS", WORKERS))
LOG_LEVEL = os.getenv("COXRIC_LOG_LEVEL", LOG_LEVEL).upper()

# EOF
