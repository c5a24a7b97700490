"""
entropic-bell

Numerical library and CLI for spin-measurement density matrices, von Neumann
and thermodynamic entropies via the matrix logarithm, and grid maps of where
Wigner-form, matrix, entropic and Cerf-Adami Bell-type inequalities hold.
"""

__version__ = "0.1.0"
__license__ = "MIT"

# Public API
from .cli import main

__all__ = ["main"]
