import math

import numpy as np
import pytest

from entropic_bell.entropy import (
    basis_eigenvalues,
    binary_entropy,
    coherence_gap,
    conditional_mutual,
    diagonal_shannon,
    report,
    shannon,
    thermo,
    von_neumann,
    von_neumann_tr,
)
from entropic_bell.errors import (
    DomainError,
    InvalidDistributionError,
    NotAStateError,
    NotInvertibleError,
)
from entropic_bell.inequality import singlet_joint
from entropic_bell.models import DensityMatrix, GeneralMatrix, JointDist, Sign, Units
from entropic_bell.qstate import density_xz, mix_pair
from entropic_bell.tolerances import BOLTZMANN

from .conftest import bloch_state, random_bloch_vector

MAXIMALLY_MIXED = DensityMatrix(0.5 * np.eye(2))


def _h(p):
    """Scalar binary entropy in nats."""
    return -sum(x * math.log(x) for x in (p, 1.0 - p) if x > 0)


def test_von_neumann_maximally_mixed():
    assert von_neumann(MAXIMALLY_MIXED) == pytest.approx(math.log(2), abs=1e-12)


def test_von_neumann_pure_state_is_exactly_zero(rng):
    for beta in rng.uniform(0, 2 * math.pi, size=50):
        for sign in Sign:
            assert von_neumann(density_xz(float(beta), sign)) == 0.0


def test_von_neumann_rejects_negative_eigenvalue():
    with pytest.raises(NotAStateError):
        von_neumann(GeneralMatrix([[1.5, 0.0], [0.0, -0.5]]))


def test_basis_eigenvalues_clip_rounding_noise():
    high, low = basis_eigenvalues(density_xz(math.pi / 3, Sign.PLUS))
    assert (high, low) == (1.0, 0.0)


def test_von_neumann_routes_agree(rng):
    for _ in range(500):
        rho = bloch_state(random_bloch_vector(rng))
        assert von_neumann_tr(rho) == pytest.approx(von_neumann(rho), abs=1e-9)


def test_von_neumann_tr_requires_invertible():
    with pytest.raises(NotInvertibleError):
        von_neumann_tr(density_xz(0.0, Sign.PLUS))


def test_thermo_scales_by_boltzmann():
    sigma = math.log(2)
    assert thermo(sigma) == BOLTZMANN * sigma
    assert thermo(sigma) / sigma == pytest.approx(1.380649e-23, rel=1e-15)
    assert thermo(0.0) == 0.0
    with pytest.raises(DomainError):
        thermo(-1e-3)


def test_report():
    result = report(MAXIMALLY_MIXED)
    assert result.sigma == pytest.approx(math.log(2))
    assert result.s_thermo == pytest.approx(BOLTZMANN * math.log(2))
    assert result.basis_eigenvalues == pytest.approx((0.5, 0.5))


def test_mixture_entropy_depends_only_on_axis_gap(rng):
    for beta_a, beta_b in rng.uniform(0, 2 * math.pi, size=(100, 2)):
        mixed = mix_pair(density_xz(float(beta_a), Sign.PLUS), density_xz(float(beta_b), Sign.PLUS))
        expected = _h(0.5 * (1 + abs(math.cos(0.5 * (beta_a - beta_b)))))
        assert von_neumann(mixed) == pytest.approx(expected, abs=1e-10)


def test_shannon():
    assert shannon([0.5, 0.5], Units.BITS) == pytest.approx(1.0)
    assert shannon([0.25] * 4) == pytest.approx(math.log(4))
    assert shannon([1.0, 0.0]) == 0.0

    with pytest.raises(InvalidDistributionError):
        shannon([0.5, 0.6])
    with pytest.raises(InvalidDistributionError):
        shannon([1.2, -0.2])
    with pytest.raises(InvalidDistributionError):
        shannon([])
    with pytest.raises(DomainError):
        shannon([0.5, 0.5], "hartleys")


def test_binary_entropy():
    assert binary_entropy(0.25) == pytest.approx(0.5623351446188083, abs=1e-12)
    assert binary_entropy(0.5, Units.BITS) == pytest.approx(1.0)
    assert binary_entropy(0.0) == 0.0
    with pytest.raises(DomainError):
        binary_entropy(1.5)


def test_conditional_mutual_independent():
    result = conditional_mutual(JointDist([[0.25, 0.25], [0.25, 0.25]]))
    assert result.h_a_given_b == pytest.approx(math.log(2))
    assert result.mutual == pytest.approx(0.0, abs=1e-15)


def test_conditional_mutual_correlated():
    result = conditional_mutual(JointDist([[0.5, 0.0], [0.0, 0.5]]), Units.BITS)
    assert result.h_a_given_b == pytest.approx(0.0, abs=1e-15)
    assert result.mutual == pytest.approx(1.0)
    assert result.units is Units.BITS


def test_conditional_mutual_chain_rule(rng):
    for _ in range(200):
        joint = JointDist(rng.dirichlet(np.ones(4)).reshape(2, 2))
        for units in Units:
            result = conditional_mutual(joint, units)
            assert abs(result.h_ab - (result.h_a + result.h_b_given_a)) <= 1e-12
            assert abs(result.h_ab - (result.h_b + result.h_a_given_b)) <= 1e-12
            assert abs(result.mutual - (result.h_a - result.h_a_given_b)) <= 1e-12
            assert result.mutual >= -1e-12


def test_conditional_mutual_of_singlet_statistics():
    result = conditional_mutual(singlet_joint(math.pi / 3))
    assert result.h_a_given_b == pytest.approx(_h(0.25), abs=1e-12)
    assert result.h_a_given_b == pytest.approx(shannon([0.25, 0.75]), abs=1e-12)
    assert result.h_a_given_b == pytest.approx(0.5623351, abs=1e-7)


def test_diagonal_shannon_and_coherence_gap():
    assert diagonal_shannon(MAXIMALLY_MIXED) == pytest.approx(math.log(2))
    assert coherence_gap(MAXIMALLY_MIXED) == pytest.approx(0.0, abs=1e-15)

    sx = density_xz(math.pi / 2, Sign.PLUS)
    assert coherence_gap(sx) == pytest.approx(math.log(2))
    assert diagonal_shannon(sx, Units.BITS) == pytest.approx(1.0)


def test_coherence_gap_is_non_negative(rng):
    for _ in range(100):
        rho = bloch_state(random_bloch_vector(rng))
        assert coherence_gap(rho) >= -1e-12
