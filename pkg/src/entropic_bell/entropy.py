"""
Entropy

Von Neumann entropy by two routes (eigenvalues, and the trace of rho ln rho),
thermodynamic entropy S = k sigma, and the classical Shannon, conditional and
mutual entropies of measurement outcomes.
"""

from __future__ import annotations

import math
from typing import Iterable, Union

import numpy as np

from .errors import (
    DomainError,
    InvalidDistributionError,
    NotAStateError,
    NotInvertibleError,
    NumericalFailureError,
)
from .matlog import eigen2, is_invertible, logm
from .models import ConditionalEntropies, DensityMatrix, EntropyReport, JointDist, Units
from .tolerances import (
    BOLTZMANN,
    DISTRIBUTION_TOL,
    ENTRY_TOL,
    INVERTIBILITY_TOL,
    NEGATIVE_EIGEN_TOL,
    TRACE_IMAG_TOL,
)

UnitsLike = Union[Units, str]


def _units(units: UnitsLike) -> Units:
    try:
        return Units(units)
    except ValueError as exc:
        raise DomainError(f"Unknown units: {units!r}. Must be 'nats' or 'bits'") from exc


def _clip_eigenvalue(value: float) -> float:
    if value < -NEGATIVE_EIGEN_TOL:
        raise NotAStateError(f"Eigenvalue {value} is negative; input is not a state")
    if value < ENTRY_TOL:
        return 0.0
    if abs(value - 1.0) <= ENTRY_TOL:
        return 1.0
    return value


def _plogp(values: Iterable[float]) -> float:
    total = 0.0
    for p in values:
        if p > 0.0:
            total += p * math.log(p)
    return 0.0 - total


def basis_eigenvalues(rho: DensityMatrix):
    """Eigenvalues of rho in its diagonal basis, clipped to [0, 1]."""
    high, low = eigen2(rho).real_eigenvalues
    return _clip_eigenvalue(high), _clip_eigenvalue(low)


def von_neumann(rho: DensityMatrix) -> float:
    """sigma = -sum_k lambda_k ln lambda_k, with 0 ln 0 = 0 (nats)."""
    return _plogp(basis_eigenvalues(rho))


def von_neumann_tr(rho: DensityMatrix, tol: float = INVERTIBILITY_TOL) -> float:
    """
    sigma = -tr(rho ln rho) through the matrix logarithm.

    Raises:
        NotInvertibleError: rho has a zero eigenvalue
        NumericalFailureError: the trace keeps an imaginary residue
    """
    if not is_invertible(rho, tol):
        raise NotInvertibleError(
            "Density matrix must be invertible for the trace route "
            f"(|det| = {abs(rho.det):.3e}); use the eigenvalue route"
        )
    log_rho = logm(rho, tol).matrix
    trace = complex(np.trace(rho.entries @ log_rho.entries))
    if abs(trace.imag) >= TRACE_IMAG_TOL:
        raise NumericalFailureError(
            f"-tr(rho ln rho) has imaginary residue {trace.imag:.3e}"
        )
    return 0.0 - trace.real


def thermo(sigma: float) -> float:
    """S = k sigma in J/K."""
    if sigma < 0:
        raise DomainError(f"sigma must be non-negative, got {sigma}")
    return BOLTZMANN * sigma


def report(rho: DensityMatrix) -> EntropyReport:
    eigenvalues = basis_eigenvalues(rho)
    sigma = _plogp(eigenvalues)
    return EntropyReport(sigma=sigma, s_thermo=thermo(sigma), basis_eigenvalues=eigenvalues)


def shannon(p: Iterable[float], units: UnitsLike = Units.NATS) -> float:
    """-sum p log p in nats or bits, with 0 log 0 = 0."""
    units = _units(units)
    probabilities = np.asarray(list(p), dtype=float)
    if probabilities.size == 0 or not np.all(np.isfinite(probabilities)):
        raise InvalidDistributionError("Distribution must be a non-empty finite vector")
    if np.any(probabilities < -ENTRY_TOL):
        raise InvalidDistributionError("Probabilities must be non-negative")
    total = float(probabilities.sum())
    if abs(total - 1.0) > DISTRIBUTION_TOL:
        raise InvalidDistributionError(f"Probabilities must sum to 1, got {total}")

    nats = _plogp(float(x) for x in probabilities)
    return nats / math.log(2) if units is Units.BITS else nats


def binary_entropy(p: float, units: UnitsLike = Units.NATS) -> float:
    """h(p) = -p ln p - (1 - p) ln(1 - p)."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    return shannon((p, 1.0 - p), units)


def conditional_mutual(joint: JointDist, units: UnitsLike = Units.NATS) -> ConditionalEntropies:
    """Conditional entropies and mutual information of a two-observer joint."""
    if not isinstance(joint, JointDist):
        joint = JointDist(joint)
    units = _units(units)

    h_ab = shannon(joint.p.ravel(), units)
    h_a = shannon(joint.marginal_a, units)
    h_b = shannon(joint.marginal_b, units)
    return ConditionalEntropies(
        h_a_given_b=h_ab - h_b,
        h_b_given_a=h_ab - h_a,
        mutual=h_a + h_b - h_ab,
        h_a=h_a,
        h_b=h_b,
        h_ab=h_ab,
        units=units,
    )


def diagonal_shannon(rho: DensityMatrix, units: UnitsLike = Units.NATS) -> float:
    """Shannon entropy of rho's S_z-basis diagonal read as classical probabilities."""
    diagonal = [min(1.0, max(0.0, float(x))) for x in rho.entries.diagonal().real]
    total = sum(diagonal)
    return shannon([x / total for x in diagonal], units)


def coherence_gap(rho: DensityMatrix) -> float:
    """diagonal_shannon - von_neumann in nats; zero iff rho is diagonal."""
    return diagonal_shannon(rho) - von_neumann(rho)
