"""
Models

Value types for spin states, 2x2 matrices, eigendecompositions, logarithms
and outcome distributions. Every type validates itself on construction.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Sequence, Tuple

import numpy as np

from .errors import InvalidDistributionError, InvalidInputError, InvalidStateError
from .tolerances import ENTRY_TOL, FULL_TURN


def normalize_angle(value: float) -> float:
    """Map an angle in radians onto [0, 2pi)."""
    if not math.isfinite(value):
        raise InvalidInputError(f"Angle must be finite, got {value!r}")
    wrapped = math.fmod(value, FULL_TURN)
    if wrapped < 0.0:
        wrapped += FULL_TURN
    # fmod of a tiny negative number can round up to a full turn
    if wrapped >= FULL_TURN:
        wrapped = 0.0
    return wrapped + 0.0


class Sign(str, Enum):
    """Outcome of a spin measurement along an axis."""

    PLUS = "+"
    MINUS = "-"

    @property
    def factor(self) -> int:
        return 1 if self is Sign.PLUS else -1

    @classmethod
    def parse(cls, value: Any) -> "Sign":
        if isinstance(value, Sign):
            return value
        text = str(value).strip().lower()
        if text in {"+", "plus", "p", "+1", "1"}:
            return cls.PLUS
        if text in {"-", "minus", "m", "-1"}:
            return cls.MINUS
        raise InvalidInputError(f"Invalid sign: {value!r}. Must be one of ['+', '-']")


class Units(str, Enum):
    NATS = "nats"
    BITS = "bits"


class LogMethod(str, Enum):
    EIGEN = "eigen"
    JORDAN = "jordan"


class LogStatus(str, Enum):
    """Whether a matrix logarithm exists and whether it is real-valued."""

    SINGULAR = "singular"
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Axis:
    """Measurement direction: alpha is the phase angle, beta the polar rotation."""

    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", normalize_angle(float(self.alpha)))
        object.__setattr__(self, "beta", normalize_angle(float(self.beta)))

    @classmethod
    def xz(cls, beta: float) -> "Axis":
        """Axis in the x-z plane (no phase)."""
        return cls(alpha=0.0, beta=beta)


@dataclass(frozen=True)
class SpinKet:
    """Amplitudes over the S_z basis {|+>, |->}."""

    c_plus: complex
    c_minus: complex

    @property
    def norm_deviation(self) -> float:
        return abs(abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2 - 1.0)

    def as_array(self) -> np.ndarray:
        return np.array([self.c_plus, self.c_minus], dtype=complex)


def _as_matrix(entries: Any) -> np.ndarray:
    try:
        array = np.array(entries, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"Matrix entries are not numeric: {exc}") from exc
    if array.shape != (2, 2):
        raise InvalidInputError(f"Expected a 2x2 matrix, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise InvalidInputError("Matrix has non-finite entries")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class GeneralMatrix:
    """Any finite 2x2 complex matrix, Hermitian or not, singular or not."""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_matrix(self.entries))

    @property
    def trace(self) -> complex:
        return complex(self.entries[0, 0] + self.entries[1, 1])

    @property
    def det(self) -> complex:
        m = self.entries
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def is_hermitian(self, tol: float = ENTRY_TOL) -> bool:
        m = self.entries
        return bool(
            abs(m[0, 0].imag) <= tol
            and abs(m[1, 1].imag) <= tol
            and abs(m[0, 1] - m[1, 0].conjugate()) <= tol
        )

    def is_real(self, tol: float = ENTRY_TOL) -> bool:
        return bool(np.all(np.abs(self.entries.imag) <= tol))

    def allclose(self, other: Any, atol: float = ENTRY_TOL) -> bool:
        other_entries = other.entries if isinstance(other, GeneralMatrix) else other
        return bool(np.allclose(self.entries, other_entries, rtol=0.0, atol=atol))

    def to_pairs(self) -> List[List[List[float]]]:
        """Row-major [re, im] pairs, the wire form used by the CLI."""
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[Sequence[float]]]):
        try:
            entries = [[complex(float(re), float(im)) for re, im in row] for row in pairs]
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(
                "Matrix must be a 2x2 array of [re, im] pairs"
            ) from exc
        return cls(entries)


def hermitian_eigenvalues(entries: np.ndarray) -> Tuple[float, float]:
    """Closed-form (descending) eigenvalues of a Hermitian 2x2 matrix."""
    a = float(entries[0, 0].real)
    d = float(entries[1, 1].real)
    b = complex(entries[0, 1])
    mean = 0.5 * (a + d)
    radius = math.hypot(0.5 * (a - d), abs(b))
    return mean + radius, mean - radius


@dataclass(frozen=True, eq=False)
class DensityMatrix(GeneralMatrix):
    """Hermitian, unit-trace, positive-semidefinite 2x2 state."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_hermitian():
            raise InvalidStateError("Density matrix must be Hermitian")
        trace = self.trace
        if abs(trace.real - 1.0) > ENTRY_TOL or abs(trace.imag) > ENTRY_TOL:
            raise InvalidStateError(f"Density matrix must have unit trace, got {trace}")
        low = hermitian_eigenvalues(self.entries)[1]
        if low < -ENTRY_TOL:
            raise InvalidStateError(
                f"Density matrix must be positive semidefinite, min eigenvalue {low}"
            )

    @classmethod
    def convex(cls, weight: float, first: "DensityMatrix", second: "DensityMatrix") -> "DensityMatrix":
        """weight * first + (1 - weight) * second; a convex mixture of states is a state."""
        if not 0.0 <= weight <= 1.0:
            raise InvalidInputError(f"Mixture weight must lie in [0, 1], got {weight}")
        entries = weight * first.entries + (1.0 - weight) * second.entries
        entries.setflags(write=False)
        state = object.__new__(cls)
        object.__setattr__(state, "entries", entries)
        return state

    @property
    def eigenvalues(self) -> Tuple[float, float]:
        return hermitian_eigenvalues(self.entries)


@dataclass(frozen=True, eq=False)
class EigenDecomp:
    """
    Eigenpairs of a 2x2 matrix.

    For defective matrices the second column of `eigenvectors` is a
    generalized eigenvector w with (m - lambda I) w = v.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    diagonalizable: bool
    hermitian_input: bool

    @property
    def real_eigenvalues(self) -> Tuple[float, float]:
        return float(self.eigenvalues[0].real), float(self.eigenvalues[1].real)


@dataclass(frozen=True)
class LogmResult:
    matrix: GeneralMatrix
    method: LogMethod
    is_complex: bool


@dataclass(frozen=True)
class EntropyReport:
    """sigma in nats, s_thermo = k * sigma in J/K."""

    sigma: float
    s_thermo: float
    basis_eigenvalues: Tuple[float, float]


@dataclass(frozen=True, eq=False)
class JointDist:
    """Two-observer outcome table: rows observer 1 (+, -), columns observer 2 (+, -)."""

    p: np.ndarray

    def __post_init__(self):
        try:
            table = np.array(self.p, dtype=float)
        except (TypeError, ValueError) as exc:
            raise InvalidDistributionError(f"Joint table is not numeric: {exc}") from exc
        if table.shape != (2, 2) or not np.all(np.isfinite(table)):
            raise InvalidDistributionError("Joint table must be a finite 2x2 array")
        if np.any(table < -ENTRY_TOL):
            raise InvalidDistributionError("Joint probabilities must be non-negative")
        total = float(table.sum())
        if abs(total - 1.0) > ENTRY_TOL:
            raise InvalidDistributionError(f"Joint probabilities must sum to 1, got {total}")
        table = np.clip(table, 0.0, None)
        table.setflags(write=False)
        object.__setattr__(self, "p", table)

    @property
    def marginal_a(self) -> np.ndarray:
        return self.p.sum(axis=1)

    @property
    def marginal_b(self) -> np.ndarray:
        return self.p.sum(axis=0)


@dataclass(frozen=True)
class ConditionalEntropies:
    h_a_given_b: float
    h_b_given_a: float
    mutual: float
    h_a: float = 0.0
    h_b: float = 0.0
    h_ab: float = 0.0
    units: Units = field(default=Units.NATS)


def principal_log(value: complex) -> complex:
    """Principal-branch logarithm with Im in (-pi, pi]."""
    # -0.0 imaginary parts would select -pi on the negative real axis
    return cmath.log(complex(value.real, value.imag + 0.0))


_PI_EXPRESSION = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*"
    r"(?:/\s*(?P<den>\d+(?:\.\d*)?|\.\d+))?\s*$",
    re.IGNORECASE,
)


def parse_angle(value: Any) -> float:
    """Parse radians given as a number or a pi expression ("pi/36", "3*pi/2", "-pi")."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    text = str(value)
    match = _PI_EXPRESSION.match(text)
    if match:
        coef = float(match.group("coef")) if match.group("coef") else 1.0
        den = float(match.group("den")) if match.group("den") else 1.0
        if den == 0:
            raise InvalidInputError(f"Invalid angle: {text!r}")
        angle = coef * math.pi / den
        return -angle if match.group("sign") == "-" else angle
    try:
        return float(text)
    except ValueError as exc:
        raise InvalidInputError(
            f"Invalid angle: {text!r}. Use radians or a pi expression such as 'pi/36'"
        ) from exc
