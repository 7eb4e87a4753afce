"""Definition of constants for this package."""

from __future__ import annotations


# brute-force guard for the exact symbol identities
MAX_SYMBOL_DIM = 6

# jet-space suites refuse this dimension and above
JET_DIM_GUARD = 5
# and need --heavy from this one
JET_HEAVY_DIM = 4
MAX_DIM = 6

# e_inv · e must reproduce the identity this closely
TOL_INVERSE = 1e-12

# only true zeros are dropped from sparse forms
PRUNE_THRESHOLD = 1e-300

TOL_ALGEBRAIC = 1e-10
TOL_CURVATURE = 1e-8
TOL_DIVERGENCE = 1e-5
TOL_CONSISTENCY = 1e-8

# v⌟Ω^k_l = VERTICAL_LIFT_SIGN δ^k_t δ^s_l θ^r for the lift of E^s_t paired with θ^r
VERTICAL_LIFT_SIGN = -1

# random jet points: e = identity + JET_SPREAD * uniform(-1, 1)
JET_SPREAD = 0.3
MAX_CONDITION = 100.0
MAX_REDRAWS = 50

SEED_ENV_VAR = "LOVELOCK_FORMS_SEED"
DEFAULT_SEED = 0

SUITES = ("symbols", "forms", "jet", "hodge", "lovelock")
EVAL_TARGETS = ("density", "tensor", "psi", "divergence", "eds")
