import math

import numpy as np
import pytest

from entropic_bell.errors import InvalidStateError
from entropic_bell.models import Axis, DensityMatrix, Sign, SpinKet
from entropic_bell.qstate import (
    antialigned_ket,
    density_from_ket,
    density_xz,
    device_beam_density,
    literal_density,
    make_ket,
    matches_sx,
    mix_pair,
    sx_density,
)


def _random_axes(rng, count=100):
    return [Axis(alpha=a, beta=b) for a, b in rng.uniform(0, 2 * math.pi, size=(count, 2))]


def test_make_ket_along_z():
    ket = make_ket(Axis.xz(0.0), Sign.PLUS)
    assert ket.c_plus == 1
    assert ket.c_minus == 0


def test_make_ket_is_normalized(rng):
    for axis in _random_axes(rng):
        for sign in Sign:
            assert make_ket(axis, sign).norm_deviation < 1e-12


def test_density_from_ket_is_pure_state(rng):
    for axis in _random_axes(rng):
        rho = density_from_ket(make_ket(axis, Sign.MINUS))
        assert rho.is_hermitian()
        assert rho.trace == pytest.approx(1.0, abs=1e-12)
        assert rho.eigenvalues == pytest.approx((1.0, 0.0), abs=1e-12)
        assert abs(rho.det) < 1e-12


def test_density_from_ket_rejects_unnormalized():
    with pytest.raises(InvalidStateError):
        density_from_ket(SpinKet(1.0, 1.0))


def test_density_from_ket_renormalizes_tiny_deviation():
    rho = density_from_ket(SpinKet(1.0 + 1e-11, 0.0))
    assert rho.entries[0, 0] == pytest.approx(1.0, abs=1e-15)


def test_density_xz_values():
    assert density_xz(math.pi / 2, Sign.PLUS).allclose([[0.5, 0.5], [0.5, 0.5]])
    assert density_xz(math.pi / 2, Sign.MINUS).allclose([[0.5, -0.5], [-0.5, 0.5]])
    assert density_xz(0.0, Sign.PLUS).allclose([[1.0, 0.0], [0.0, 0.0]])
    assert density_xz(math.pi, Sign.PLUS).allclose([[0.0, 0.0], [0.0, 1.0]])


def test_density_xz_matches_ket_construction(rng):
    for beta in rng.uniform(0, 2 * math.pi, size=50):
        for sign in Sign:
            expected = density_from_ket(make_ket(Axis.xz(beta), sign))
            assert density_xz(float(beta), sign).allclose(expected)


def test_density_xz_has_real_entries(rng):
    for beta in rng.uniform(0, 2 * math.pi, size=50):
        assert density_xz(float(beta), Sign.PLUS).is_real()


def test_density_xz_is_a_rank_one_projector(rng):
    for beta in rng.uniform(-4 * math.pi, 4 * math.pi, size=100):
        for sign in Sign:
            rho = density_xz(float(beta), sign)
            assert abs(rho.trace - 1.0) <= 1e-12
            assert abs(rho.det) <= 1e-12
            assert np.allclose(rho.entries @ rho.entries, rho.entries, rtol=0.0, atol=1e-12)


def test_literal_density_reduces_to_xz_without_phase():
    axis = Axis.xz(math.pi / 3)
    assert literal_density(axis, Sign.PLUS).allclose(density_xz(math.pi / 3, Sign.PLUS))


def test_literal_density_is_singular_and_not_hermitian():
    m = literal_density(Axis(alpha=math.pi / 3, beta=math.pi / 2), Sign.PLUS)
    assert not m.is_hermitian()
    assert abs(m.det) < 1e-12
    assert not isinstance(m, DensityMatrix)


def test_mix_pair():
    mixed = mix_pair(density_xz(0.0, Sign.PLUS), density_xz(math.pi / 2, Sign.PLUS))
    assert mixed.allclose([[0.75, 0.25], [0.25, 0.25]])


def test_mix_pair_of_antipodal_axes_is_maximally_mixed():
    mixed = mix_pair(density_xz(0.0, Sign.PLUS), density_xz(math.pi, Sign.PLUS))
    assert mixed.allclose(0.5 * np.eye(2))


def test_mixture_eigenvalues_depend_on_axis_gap(rng):
    for beta_a, beta_b in rng.uniform(0, 2 * math.pi, size=(100, 2)):
        mixed = mix_pair(density_xz(float(beta_a), Sign.PLUS), density_xz(float(beta_b), Sign.PLUS))
        spread = abs(math.cos(0.5 * (beta_a - beta_b)))
        assert mixed.eigenvalues == pytest.approx((0.5 * (1 + spread), 0.5 * (1 - spread)), abs=1e-12)


def test_mixture_off_diagonal_is_mean_of_sines(rng):
    for beta_a, beta_b in rng.uniform(0, 2 * math.pi, size=(100, 2)):
        mixed = mix_pair(density_xz(float(beta_a), Sign.PLUS), density_xz(float(beta_b), Sign.PLUS))
        expected = 0.25 * (math.sin(beta_a) + math.sin(beta_b))
        assert abs(mixed.entries[0, 1] - expected) <= 1e-12
        assert abs(mixed.entries[1, 0] - expected) <= 1e-12


def test_antialigned_ket_is_orthogonal(rng):
    for axis in _random_axes(rng):
        plus = make_ket(axis, Sign.PLUS).as_array()
        anti = antialigned_ket(axis).as_array()
        assert abs(np.vdot(plus, anti)) < 1e-12


def test_device_beam_is_maximally_mixed(rng):
    for axis in _random_axes(rng):
        assert device_beam_density(axis).allclose(0.5 * np.eye(2))


def test_sx_density_and_matches_sx():
    assert sx_density(Sign.PLUS).allclose([[0.5, 0.5], [0.5, 0.5]])
    assert matches_sx(density_xz(math.pi / 2, Sign.PLUS))
    assert matches_sx(density_xz(math.pi / 2, Sign.MINUS), Sign.MINUS)
    assert not matches_sx(density_xz(0.0, Sign.PLUS))


def test_mixture_of_orthogonal_axes_is_not_sx_projector():
    mixed = mix_pair(density_xz(0.0, Sign.PLUS), density_xz(math.pi / 2, Sign.PLUS))
    assert not matches_sx(mixed)
