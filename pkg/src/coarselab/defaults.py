"""Central table of numerical defaults.

Every tolerance, window list and cutoff used by the package is defined here
exactly once, so reports produced with default settings are reproducible.
The CLI exposes each entry through a flag of the same name.
"""

# Symmetry/unitary certification
SYMMETRY_TOL = 1e-12          # max-norm asymmetry relative to max-norm of A
EIG_RESIDUAL_TOL = 1e-8       # ||AV - V Lambda||_max relative to ||A||
ORTHO_RESIDUAL_TOL = 1e-8     # ||V^T V - I||_max
UNITARY_RESIDUAL_TOL = 1e-8   # ||U* U - I||_max for Cayley transforms

# Kernel / spectral thresholds
SV_KERNEL_TOL = 1e-8          # singular values below this count as zero
ZERO_TOL_FACTOR = 1e-9        # eta/kernel zero threshold: factor * ||A||
PROJECTION_TOL = 1e-8         # ||P^2 - P|| certification
ADMISSIBLE_CHI_TOL = 1e-10    # |1 - chi^2| allowed outside the declared gap

# Wave lab
SUPPORT_EPS = 1e-12           # |value| above this counts as support
UNITARITY_DRIFT_TOL = 1e-12   # allowed norm drift per evolution step

# Index lab
DEFAULT_WINDOWS = (16, 32, 64)
STABLE_WINDOW_COUNT = 3       # consecutive agreeing windows for stabilization

# Sequence lab
BRUTE_FORCE_HORIZON = 10_000  # partial-sum horizon used by oracles

# Torus Schatten series
DEFAULT_CUTOFF = 1_000_000

# APS half-cylinder quadrature
APS_HORIZON = 8.0
APS_QUAD_STEP = 1e-3
APS_DIVERGENCE_THRESHOLD = 1e6

# Graph lab
ENDS_MAX_RADIUS = 6           # window radius for end counting on rules
FLOW_DEFAULT_CAPACITY = 2
FLOW_DEFAULT_RADII = (2, 3, 4, 5, 6)
FOLNER_DEFAULT_EPSILON = 0.1
FOLNER_DEFAULT_RADII = tuple(range(1, 33))
