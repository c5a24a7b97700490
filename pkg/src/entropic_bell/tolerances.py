"""Numeric tolerances and physical constants shared across entropic_bell."""

import math

# Entrywise absolute tolerance for matrix equality, Hermiticity and trace.
ENTRY_TOL = 1e-12

# Ket norm deviation accepted before a state is rejected.
NORM_TOL = 1e-9

# Eigenvalues below -NEGATIVE_EIGEN_TOL mean the matrix is not a state.
NEGATIVE_EIGEN_TOL = 1e-9

# Relative eigenvalue gap at or below which logm takes the Jordan path.
DEFECT_REL_TOL = 1e-10

# Default |det| threshold for invertibility.
INVERTIBILITY_TOL = 1e-12

# Trace-route residue allowed in the imaginary part of -tr(rho ln rho).
TRACE_IMAG_TOL = 1e-10

# Probability vectors must sum to one within this tolerance.
DISTRIBUTION_TOL = 1e-9

# Boltzmann constant in J/K (exact SI value).
BOLTZMANN = 1.380649e-23

# Scalar verdicts hold when the worst margin is at least -VERDICT_TOL.
VERDICT_TOL = 1e-12

TAYLOR_MAX_TERMS = 200

DEFAULT_STEP = math.pi / 36
FULL_TURN = 2.0 * math.pi
MAX_GRID_POINTS = 10**8
