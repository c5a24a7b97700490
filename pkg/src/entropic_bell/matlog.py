"""
Matrix logarithm

Closed-form eigendecomposition of 2x2 complex matrices, the matrix logarithm
(spectral route with a Jordan-form fallback for defective matrices), the
matrix exponential used to check it, and invertibility diagnostics.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import Tuple

import numpy as np

from .errors import DomainError, NotInvertibleError, NumericalFailureError
from .models import (
    EigenDecomp,
    GeneralMatrix,
    LogMethod,
    LogmResult,
    LogStatus,
    hermitian_eigenvalues,
    principal_log,
)
from .tolerances import DEFECT_REL_TOL, ENTRY_TOL, INVERTIBILITY_TOL, TAYLOR_MAX_TERMS

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=complex)


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def _kernel_vector(m: np.ndarray, lam: complex, fallback: np.ndarray) -> np.ndarray:
    """Unit vector v with (m - lam I) v = 0, from the better-conditioned row."""
    from_row0 = np.array([m[0, 1], lam - m[0, 0]], dtype=complex)
    from_row1 = np.array([lam - m[1, 1], m[1, 0]], dtype=complex)
    n0, n1 = np.linalg.norm(from_row0), np.linalg.norm(from_row1)
    if max(n0, n1) <= ENTRY_TOL * max(1.0, np.linalg.norm(m)):
        return fallback
    return _unit(from_row0 if n0 >= n1 else from_row1)


def _defect_threshold(m: GeneralMatrix) -> float:
    return DEFECT_REL_TOL * max(1.0, m.frobenius_norm)


def _jordan_basis(m: np.ndarray, lam: complex) -> np.ndarray:
    """
    Columns [v, w] with (m - lam I) w = v and (m - lam I) v = 0.

    N = m - lam I is rank one and nilpotent, so its largest column v spans
    both its range and its kernel, and the matching unit vector e_j solves
    N e_j = v directly.
    """
    nilpotent = m - lam * IDENTITY
    j = int(np.argmax(np.linalg.norm(nilpotent, axis=0)))
    basis = np.zeros((2, 2), dtype=complex)
    basis[:, 0] = nilpotent[:, j]
    basis[j, 1] = 1.0
    return basis


def eigen2(m: GeneralMatrix) -> EigenDecomp:
    """Eigenvalues from the 2x2 characteristic polynomial, with eigenvectors."""
    if not isinstance(m, GeneralMatrix):
        m = GeneralMatrix(m)
    entries = m.entries

    if m.is_hermitian():
        high, low = hermitian_eigenvalues(entries)
        if high - low <= ENTRY_TOL * max(1.0, m.frobenius_norm) and abs(entries[0, 1]) <= ENTRY_TOL:
            vectors = IDENTITY.copy()
        else:
            v_high = _kernel_vector(entries, high, IDENTITY[:, 0])
            # orthogonal complement keeps the columns exactly orthonormal
            v_low = np.array([-v_high[1].conjugate(), v_high[0].conjugate()], dtype=complex)
            vectors = np.column_stack([v_high, v_low])
        return EigenDecomp(
            eigenvalues=np.array([high, low], dtype=complex),
            eigenvectors=vectors,
            diagonalizable=True,
            hermitian_input=True,
        )

    half_trace = 0.5 * m.trace
    # (tr/2)^2 - det rewritten so close eigenvalues do not cancel
    half_gap = 0.5 * complex(entries[0, 0] - entries[1, 1])
    root = cmath.sqrt(half_gap * half_gap + complex(entries[0, 1] * entries[1, 0]))
    lam1, lam2 = half_trace + root, half_trace - root

    scalar = abs(entries[0, 1]) <= ENTRY_TOL and abs(entries[1, 0]) <= ENTRY_TOL
    if abs(lam1 - lam2) <= _defect_threshold(m):
        if scalar and abs(entries[0, 0] - entries[1, 1]) <= _defect_threshold(m):
            return EigenDecomp(
                eigenvalues=np.array([entries[0, 0], entries[1, 1]], dtype=complex),
                eigenvectors=IDENTITY.copy(),
                diagonalizable=True,
                hermitian_input=False,
            )
        return EigenDecomp(
            eigenvalues=np.array([half_trace, half_trace], dtype=complex),
            eigenvectors=_jordan_basis(entries, half_trace),
            diagonalizable=False,
            hermitian_input=False,
        )

    if scalar:
        # diagonal input: eigenvalues are the entries themselves
        lam1, lam2 = complex(entries[0, 0]), complex(entries[1, 1])
        vectors = IDENTITY.copy()
    else:
        v1 = _kernel_vector(entries, lam1, IDENTITY[:, 0])
        v2 = _kernel_vector(entries, lam2, IDENTITY[:, 1])
        vectors = np.column_stack([v1, v2])
    return EigenDecomp(
        eigenvalues=np.array([lam1, lam2], dtype=complex),
        eigenvectors=vectors,
        diagonalizable=True,
        hermitian_input=False,
    )


def is_invertible(m: GeneralMatrix, tol: float = INVERTIBILITY_TOL) -> bool:
    """True iff |det(m)| > tol."""
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if not isinstance(m, GeneralMatrix):
        m = GeneralMatrix(m)
    return abs(m.det) > tol


def _apply(decomp: EigenDecomp, values: Tuple[complex, complex]) -> np.ndarray:
    """V diag(values) V^H for an orthonormal eigenbasis V."""
    vectors = decomp.eigenvectors
    return (vectors * np.array(values, dtype=complex)) @ vectors.conj().T


def _two_point(entries: np.ndarray, lam2: complex, f_lam2: complex, slope: complex) -> np.ndarray:
    """f(m) = f(lam2) I + f[lam1, lam2] (m - lam2 I) for a 2x2 m with eigenvalues lam1, lam2."""
    return f_lam2 * IDENTITY + slope * (entries - lam2 * IDENTITY)


def _log_slope(lam1: complex, lam2: complex, log1: complex, log2: complex) -> complex:
    """Divided difference (log lam1 - log lam2) / (lam1 - lam2), stable for close eigenvalues."""
    delta = lam1 - lam2
    if delta == 0:
        return 1.0 / lam1
    if abs(delta) > 0.5 * max(abs(lam1), abs(lam2)):
        return (log1 - log2) / delta
    # 2 atanh(z) = log(lam1 / lam2); the unwinding term restores the principal branches
    principal = 2.0 * cmath.atanh(delta / (lam1 + lam2))
    unwind = round(((log1 - log2) - principal).imag / (2.0 * math.pi))
    return (principal + 2j * math.pi * unwind) / delta


def _exp_slope(lam1: complex, lam2: complex) -> complex:
    """Divided difference (e^lam1 - e^lam2) / (lam1 - lam2)."""
    half = 0.5 * (lam1 - lam2)
    mean = cmath.exp(0.5 * (lam1 + lam2))
    if half == 0:
        return mean
    return mean * cmath.sinh(half) / half


def logm(m: GeneralMatrix, tol: float = INVERTIBILITY_TOL) -> LogmResult:
    """
    Principal matrix logarithm.

    Raises:
        NotInvertibleError: |det(m)| <= tol
        InvalidInputError: non-finite entries
    """
    if not isinstance(m, GeneralMatrix):
        m = GeneralMatrix(m)
    if not is_invertible(m, tol):
        raise NotInvertibleError(
            f"Matrix must be invertible for a logarithm to exist (|det| = {abs(m.det):.3e})"
        )

    decomp = eigen2(m)
    entries = m.entries
    if decomp.diagonalizable:
        lam1, lam2 = (complex(lam) for lam in decomp.eigenvalues)
        log1, log2 = principal_log(lam1), principal_log(lam2)
        if decomp.hermitian_input:
            result = _apply(decomp, (log1, log2))
        else:
            result = _two_point(entries, lam2, log2, _log_slope(lam1, lam2, log1, log2))
        method = LogMethod.EIGEN
    else:
        lam = complex(decomp.eigenvalues[0])
        # log(lam I + N) = ln(lam) I + N / lam on the Jordan block
        result = _two_point(entries, lam, principal_log(lam), 1.0 / lam)
        method = LogMethod.JORDAN
        logger.debug("logm took the Jordan path (eigenvalue %s)", lam)

    is_complex = bool(np.any(np.abs(result.imag) > ENTRY_TOL))
    return LogmResult(matrix=GeneralMatrix(result), method=method, is_complex=is_complex)


def _expm_taylor(entries: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(entries))
    squarings = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    scaled = entries / (2.0**squarings)

    total = IDENTITY.copy()
    term = IDENTITY.copy()
    for k in range(1, TAYLOR_MAX_TERMS + 1):
        term = term @ scaled / k
        total = total + term
        if np.linalg.norm(term) <= np.finfo(float).eps * np.linalg.norm(total):
            break
    else:
        raise NumericalFailureError(
            f"Exponential series did not converge within {TAYLOR_MAX_TERMS} terms"
        )

    for _ in range(squarings):
        total = total @ total
    return total


def expm(m: GeneralMatrix) -> GeneralMatrix:
    """Matrix exponential; exact on diagonal inputs."""
    if not isinstance(m, GeneralMatrix):
        m = GeneralMatrix(m)
    entries = m.entries

    if entries[0, 1] == 0 and entries[1, 0] == 0:
        return GeneralMatrix(np.diag([cmath.exp(entries[0, 0]), cmath.exp(entries[1, 1])]))

    decomp = eigen2(m)
    if not decomp.diagonalizable:
        return GeneralMatrix(_expm_taylor(entries))
    lam1, lam2 = (complex(lam) for lam in decomp.eigenvalues)
    if decomp.hermitian_input:
        return GeneralMatrix(_apply(decomp, (cmath.exp(lam1), cmath.exp(lam2))))
    return GeneralMatrix(_two_point(entries, lam2, cmath.exp(lam2), _exp_slope(lam1, lam2)))


def log_status(m: GeneralMatrix, tol: float = INVERTIBILITY_TOL) -> LogStatus:
    """Classify whether m has a logarithm and whether it is real-valued."""
    if not isinstance(m, GeneralMatrix):
        m = GeneralMatrix(m)
    if not is_invertible(m, tol):
        return LogStatus.SINGULAR
    return LogStatus.COMPLEX if logm(m, tol).is_complex else LogStatus.REAL
