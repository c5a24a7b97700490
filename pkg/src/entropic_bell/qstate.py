"""
Spin states

Spin kets along an arbitrary axis, their density matrices, and the 50-50
measurement mixtures built from them.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .errors import InvalidStateError
from .models import Axis, DensityMatrix, GeneralMatrix, Sign, SpinKet, normalize_angle
from .tolerances import ENTRY_TOL, NORM_TOL


def make_ket(axis: Axis, sign: Sign) -> SpinKet:
    """|S.n; +-> = cos(beta/2)|+> +- sin(beta/2) e^{i alpha}|->."""
    sign = Sign.parse(sign)
    half = 0.5 * axis.beta
    return SpinKet(
        c_plus=complex(math.cos(half)),
        c_minus=sign.factor * math.sin(half) * cmath.exp(1j * axis.alpha),
    )


def antialigned_ket(axis: Axis) -> SpinKet:
    """State orthogonal to make_ket(axis, +): the axis reflected through the origin."""
    return make_ket(Axis(alpha=axis.alpha, beta=axis.beta + math.pi), Sign.PLUS)


def density_from_ket(ket: SpinKet) -> DensityMatrix:
    """Hermitian outer product |psi><psi|."""
    if ket.norm_deviation > NORM_TOL:
        raise InvalidStateError(
            f"Ket is not normalized (|norm^2 - 1| = {ket.norm_deviation:.3e})"
        )
    vector = ket.as_array()
    vector = vector / np.linalg.norm(vector)
    return DensityMatrix(np.outer(vector, vector.conj()))


@lru_cache(maxsize=8192)
def density_xz(beta: float, sign: Sign) -> DensityMatrix:
    """Projector for an axis in the x-z plane."""
    sign = Sign.parse(sign)
    half = 0.5 * normalize_angle(beta)
    c, s = math.cos(half), math.sin(half)
    off = sign.factor * c * s
    return DensityMatrix([[c * c, off], [off, s * s]])


def literal_density(axis: Axis, sign: Sign) -> GeneralMatrix:
    """
    The general-axis matrix in its printed form.

    Both off-diagonals carry e^{i alpha} and the lower-right entry carries
    e^{2 i alpha}, so the result is the unconjugated product v v^T. It is
    not Hermitian for alpha not in {0, pi} and is always singular.
    """
    sign = Sign.parse(sign)
    half = 0.5 * axis.beta
    c, s = math.cos(half), math.sin(half)
    phase = cmath.exp(1j * axis.alpha)
    off = sign.factor * c * s * phase
    return GeneralMatrix([[c * c, off], [off, s * s * phase * phase]])


def mix_pair(rho_a: DensityMatrix, rho_b: DensityMatrix) -> DensityMatrix:
    """Incoherent 50-50 mixture."""
    if not isinstance(rho_a, DensityMatrix):
        rho_a = DensityMatrix(getattr(rho_a, "entries", rho_a))
    if not isinstance(rho_b, DensityMatrix):
        rho_b = DensityMatrix(getattr(rho_b, "entries", rho_b))
    return DensityMatrix.convex(0.5, rho_a, rho_b)


def device_beam_density(axis: Axis) -> DensityMatrix:
    """Beam inside a single device: half aligned, half antialigned along `axis`."""
    aligned = density_from_ket(make_ket(axis, Sign.PLUS))
    antialigned = density_from_ket(antialigned_ket(axis))
    return mix_pair(aligned, antialigned)


def sx_density(sign: Sign = Sign.PLUS) -> DensityMatrix:
    """S_x eigenprojector in the S_z basis."""
    return density_xz(math.pi / 2, Sign.parse(sign))


def matches_sx(rho: DensityMatrix, sign: Sign = Sign.PLUS, atol: float = ENTRY_TOL) -> bool:
    return rho.allclose(sx_density(sign), atol=atol)
