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

# Runs the coxric command line from a checkout, without installing.
#
#     ./Scripts/coxric.py check A3 --seed 7 --json

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "Sources"))

from coxric.cli import main

if __name__ == "__main__":
	sys.exit(main())

# EOF
