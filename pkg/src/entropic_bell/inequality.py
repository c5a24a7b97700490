"""
Inequality checkers

Wigner-form probability, matrix (entrywise and Loewner), entropic and
Cerf-Adami triangle inequalities over spin measurements. Every checker
returns an IneqVerdict carrying per-comparison margins (RHS - LHS).
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator

from .entropy import conditional_mutual, thermo, von_neumann, von_neumann_tr
from .errors import NotComparableError
from .matlog import is_invertible, log_status
from .models import (
    Axis,
    DensityMatrix,
    JointDist,
    Sign,
    Units,
    hermitian_eigenvalues,
)
from .qstate import density_from_ket, density_xz, make_ket, mix_pair
from .tolerances import ENTRY_TOL, VERDICT_TOL


class VerdictKind(str, Enum):
    WIGNER_PROB = "wigner_prob"
    MATRIX_ENTRYWISE = "matrix_entrywise"
    MATRIX_LOEWNER = "matrix_loewner"
    ENTROPIC = "entropic"
    CERF_ADAMI = "cerf_adami"


class MatrixMode(str, Enum):
    ENTRYWISE = "entrywise"
    LOEWNER = "loewner"


class IneqVerdict(BaseModel):
    kind: VerdictKind
    holds: bool
    margins: List[float]
    worst_margin: float
    inputs_echo: Dict[str, Any] = Field(default_factory=dict)
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _consistent(self) -> "IneqVerdict":
        if not self.margins:
            raise ValueError("A verdict needs at least one margin")
        if self.worst_margin != min(self.margins):
            raise ValueError("worst_margin must equal min(margins)")
        if self.holds != (self.worst_margin >= -VERDICT_TOL):
            raise ValueError("holds must agree with worst_margin")
        return self

    @classmethod
    def from_margins(cls, kind: VerdictKind, margins: Sequence[float], **kwargs) -> "IneqVerdict":
        margins = [float(m) for m in margins]
        worst = min(margins)
        return cls(
            kind=kind,
            holds=worst >= -VERDICT_TOL,
            margins=margins,
            worst_margin=worst,
            **kwargs,
        )


def singlet_joint(theta: float) -> JointDist:
    """Singlet outcome law: P(same) = sin^2(theta/2)/2, P(opposite) = cos^2(theta/2)/2."""
    same = 0.5 * math.sin(0.5 * theta) ** 2
    opposite = 0.5 * math.cos(0.5 * theta) ** 2
    return JointDist([[same, opposite], [opposite, same]])


def _pair_plus(beta_x: float, beta_y: float) -> float:
    return float(singlet_joint(beta_x - beta_y).p[0, 0])


def check_wigner_prob(beta_a: float, beta_b: float, beta_c: float) -> IneqVerdict:
    """P(a+; c+) <= P(a+; b+) + P(b+; c+)."""
    p_ab = _pair_plus(beta_a, beta_b)
    p_bc = _pair_plus(beta_b, beta_c)
    p_ac = _pair_plus(beta_a, beta_c)
    return IneqVerdict.from_margins(
        VerdictKind.WIGNER_PROB,
        [p_ab + p_bc - p_ac],
        lhs=p_ac,
        rhs=p_ab + p_bc,
        inputs_echo={"beta_a": beta_a, "beta_b": beta_b, "beta_c": beta_c},
        details={"p_ab": p_ab, "p_bc": p_bc, "p_ac": p_ac},
    )


def _measurement_state(beta: float, sign: Sign, alpha: float) -> DensityMatrix:
    if alpha == 0.0:
        return density_xz(beta, sign)
    return density_from_ket(make_ket(Axis(alpha=alpha, beta=beta), sign))


def measurement_mixtures(
    beta_a: float,
    beta_b: float,
    beta_c: float,
    sign_a: Sign = Sign.PLUS,
    sign_b: Sign = Sign.PLUS,
    sign_c: Sign = Sign.PLUS,
    alpha: float = 0.0,
) -> Dict[str, DensityMatrix]:
    """rho_ab, rho_ac, rho_cb: each mixes the first-named and second-named measurement."""
    rho_a = _measurement_state(beta_a, Sign.parse(sign_a), alpha)
    rho_b = _measurement_state(beta_b, Sign.parse(sign_b), alpha)
    rho_c = _measurement_state(beta_c, Sign.parse(sign_c), alpha)
    return {
        "ab": mix_pair(rho_a, rho_b),
        "ac": mix_pair(rho_a, rho_c),
        "cb": mix_pair(rho_c, rho_b),
    }


def check_matrix(
    beta_a: float,
    beta_b: float,
    beta_c: float,
    sign_a: Sign = Sign.PLUS,
    sign_b: Sign = Sign.PLUS,
    sign_c: Sign = Sign.PLUS,
    mode: MatrixMode = MatrixMode.ENTRYWISE,
    alpha: float = 0.0,
) -> IneqVerdict:
    """
    rho_cb <= rho_ab + rho_ac.

    Entrywise mode compares the four matrix elements; Loewner mode requires
    the difference to be positive semidefinite.

    Raises:
        NotComparableError: entrywise mode with complex entries
    """
    mode = MatrixMode(mode)
    signs = [Sign.parse(s) for s in (sign_a, sign_b, sign_c)]
    mixtures = measurement_mixtures(beta_a, beta_b, beta_c, *signs, alpha=alpha)
    difference = mixtures["ab"].entries + mixtures["ac"].entries - mixtures["cb"].entries

    echo = {
        "beta_a": beta_a,
        "beta_b": beta_b,
        "beta_c": beta_c,
        "sign_a": signs[0].value,
        "sign_b": signs[1].value,
        "sign_c": signs[2].value,
        "mode": mode.value,
    }
    if alpha:
        echo["alpha"] = alpha

    if mode is MatrixMode.ENTRYWISE:
        if np.any(np.abs(difference.imag) > ENTRY_TOL):
            raise NotComparableError(
                "Entrywise order is undefined for complex matrix elements "
                "(measurement axes leave the x-z plane)"
            )
        margins = [float(x) for x in difference.real.ravel()]
        return IneqVerdict.from_margins(VerdictKind.MATRIX_ENTRYWISE, margins, inputs_echo=echo)

    low = hermitian_eigenvalues(difference)[1]
    return IneqVerdict.from_margins(VerdictKind.MATRIX_LOEWNER, [low], inputs_echo=echo)


def check_entropy(
    beta_a: float,
    beta_b: float,
    beta_c: float,
    sign_a: Sign = Sign.PLUS,
    sign_b: Sign = Sign.PLUS,
    sign_c: Sign = Sign.PLUS,
    cross_check: bool = False,
) -> IneqVerdict:
    """
    sigma_cb <= sigma_ab + sigma_ac over the von Neumann entropies (nats).

    With cross_check the trace route is evaluated too, when all three
    mixtures are invertible, and its margin stored in details.
    """
    signs = [Sign.parse(s) for s in (sign_a, sign_b, sign_c)]
    mixtures = measurement_mixtures(beta_a, beta_b, beta_c, *signs)
    sigma = {key: von_neumann(rho) for key, rho in mixtures.items()}

    rhs = sigma["ab"] + sigma["ac"]
    details: Dict[str, Any] = {f"sigma_{key}": value for key, value in sigma.items()}
    details.update({f"s_{key}_j_per_k": thermo(value) for key, value in sigma.items()})

    if cross_check:
        details["log_status"] = {key: log_status(rho).value for key, rho in mixtures.items()}
        if all(is_invertible(rho) for rho in mixtures.values()):
            traced = {key: von_neumann_tr(rho) for key, rho in mixtures.items()}
            details["trace_route_margin"] = traced["ab"] + traced["ac"] - traced["cb"]
        else:
            details["trace_route_margin"] = None

    return IneqVerdict.from_margins(
        VerdictKind.ENTROPIC,
        [rhs - sigma["cb"]],
        lhs=sigma["cb"],
        rhs=rhs,
        inputs_echo={
            "beta_a": beta_a,
            "beta_b": beta_b,
            "beta_c": beta_c,
            "sign_a": signs[0].value,
            "sign_b": signs[1].value,
            "sign_c": signs[2].value,
        },
        details=details,
    )


def check_cerf_adami(
    theta_ab: float,
    theta_bc: float,
    theta_ac: float,
    units: Units = Units.NATS,
) -> IneqVerdict:
    """H(A|C) <= H(A|B) + H(B|C) over singlet outcome statistics."""
    units = Units(units)
    h_ab = conditional_mutual(singlet_joint(theta_ab), units).h_a_given_b
    h_bc = conditional_mutual(singlet_joint(theta_bc), units).h_a_given_b
    h_ac = conditional_mutual(singlet_joint(theta_ac), units).h_a_given_b
    return IneqVerdict.from_margins(
        VerdictKind.CERF_ADAMI,
        [h_ab + h_bc - h_ac],
        lhs=h_ac,
        rhs=h_ab + h_bc,
        inputs_echo={
            "theta_ab": theta_ab,
            "theta_bc": theta_bc,
            "theta_ac": theta_ac,
            "units": units.value,
        },
        details={"h_a_given_b": h_ab, "h_b_given_c": h_bc, "h_a_given_c": h_ac},
    )
