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

# Built-in settings, used when COXRIC_SETTINGS is not defined.
# Every UPPERCASE name here can be overridden by a settings module.

# coxeter
FINITE_TYPE_TOL             = 1e-9

# roots
ROOT_MATCH_TOL              = 1e-6
ROOT_AMBIGUITY_TOL          = 1e-4
POSITIVITY_TOL              = 1e-8
ROOT_NORM_TOL               = 1e-8
ROOT_CAP                    = 10000

# group
ELEMENT_CAP                 = 100000
GROUP_MAX_ORDER             = 1500   # lifted by --force, up to ELEMENT_CAP

# linalg
SYMMETRY_TOL                = 1e-12
EIGEN_TOL                   = 1e-12
EIGEN_MAX_SWEEPS            = 100
JACOBI_MAX_ORDER            = 64     # above this order, LAPACK (numpy.linalg.eigh)

# spectral
ZERO_EIGEN_TOL              = 1e-8
GAP_TOL                     = 1e-8
SPECTRAL_MAX_VERTICES       = 1500
SPECTRAL_FORCE_MAX_VERTICES = 20000
SPECTRUM_ELIDE_ABOVE        = 200    # JSON keeps (min, gap, max) only above this size

# isoperimetry
EXHAUSTIVE_MAX_VERTICES     = 20
ISO_SLACK_TOL               = 1e-9
DEFAULT_SEED                = 42
DEFAULT_SAMPLES             = 10000
ISO_CHUNK_SIZE              = 1000   # samples per seeded chunk (seed + chunk index)

# dihedral
PLANE_TOL                   = 1e-8
QUADRUPLE_EXHAUSTIVE_REFLECTIONS = 30 # above this many reflections, quadruples are sampled
QUADRUPLE_SAMPLES           = 2000

# gamma and checks
RICCI_TOL                   = 1e-8
ORACLE_RTOL                 = 1e-10
RANDOM_FUNCTIONS            = 100
SPOT_CHECK_VERTICES         = 20
ALL_VERTICES_MAX_ORDER      = 400    # above this order, checks visit a spot-check sample of vertices
ESTIMATE_FUNCTIONS          = 1000

# output and runtime
FLOAT_DIGITS                = 12
WORKERS                     = 1
LOG_LEVEL                   = "WARNING"

# EOF
